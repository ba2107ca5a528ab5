#include <catch2/catch_amalgamated.hpp>

#include "lff/random.hpp"
#include "lff/step_function.hpp"

using namespace lff;

namespace {
StepFunction make(const FieldParamsPtr& fp, int M, int N, std::vector<Complex> v) {
  return StepFunction(fp, M, N, std::move(v));
}
}  // namespace

TEST_CASE("cell representatives") {
  const auto f2 = make_field_q(2);
  CHECK(cell_rep(f2, 1, 1, 0).is_zero());
  // t * u(3) = t^-1 + 1
  CHECK(cell_rep(f2, 1, 1, 3) ==
        FieldElement::monomial(f2, -1) + FieldElement::monomial(f2, 0));
  CHECK(cell_rep(f2, 0, 2, 1) == FieldElement::monomial(f2, 1));
  CHECK_THROWS_AS(cell_rep(f2, 1, 1, 4), FieldError);

  // representatives are pairwise incongruent mod P^N and enumerate the cosets
  for (const auto& fp : {make_field_q(2), make_field_q(3)}) {
    for (int M = 0; M <= 3; ++M)
      for (int N = 0; N <= 3 - M; ++N) {
        const long long D = detail::ipow(fp->q(), M + N);
        for (long long a = 0; a < D; ++a)
          for (long long b = a + 1; b < D; ++b) {
            const FieldElement diff = cell_rep(fp, M, N, a) - cell_rep(fp, M, N, b);
            REQUIRE(!diff.is_zero());
            REQUIRE(*diff.valuation() < N);  // not in P^N
          }
      }
  }
}

TEST_CASE("cell bijection round-trips through evaluation") {
  for (const auto& fp : {make_field_q(2), make_field_q(3)}) {
    for (int M = 0; M <= 3; ++M)
      for (int N = 0; N <= 3; ++N) {
        const long long D = detail::ipow(fp->q(), M + N);
        std::vector<Complex> v(D);
        for (long long n = 0; n < D; ++n) v[n] = {static_cast<double>(n), 0.0};
        const StepFunction f = make(fp, M, N, v);
        for (long long n = 0; n < D; ++n)
          CHECK(value_at(f, cell_rep(fp, M, N, n)) == Complex{static_cast<double>(n), 0.0});
      }
  }
}

TEST_CASE("inner product, norm, integral") {
  const auto f2 = make_field_q(2);
  const StepFunction oneD = StepFunction::indicator(f2, 0, 0);
  CHECK(inner_product(oneD, oneD) == Complex{1.0, 0.0});

  const StepFunction half = make(f2, 0, 1, {{1, 0}, {0, 0}});  // indicator of pD
  CHECK(inner_product(half, oneD) == Complex{0.5, 0.0});
  CHECK(integral(half) == Complex{0.5, 0.0});

  const StepFunction other = make(f2, 0, 1, {{0, 0}, {1, 0}});
  CHECK(inner_product(half, other) == Complex{0.0, 0.0});

  const StepFunction f = make(f2, 0, 1, {{3, 1}, {-1, 2}});
  CHECK(norm(f) * norm(f) == Catch::Approx(0.5 * (10 + 5)).epsilon(1e-14));

  // conjugate-linear in the second argument
  const Complex z{0.3, -0.7};
  CHECK(std::abs(inner_product(f, other * z) - std::conj(z) * inner_product(f, other)) <
        1e-15);

  // embedding either argument anywhere finer never changes the value
  const Complex base = inner_product(f, half);
  for (int M = 0; M <= 2; ++M)
    for (int N = 1; N <= 3; ++N) {
      CHECK(std::abs(inner_product(f.embedded(M, N), half) - base) <= 1e-14);
      CHECK(std::abs(inner_product(f, half.embedded(M, N)) - base) <= 1e-14);
    }
}

TEST_CASE("translation") {
  const auto f2 = make_field_q(2);
  const StepFunction oneD = StepFunction::indicator(f2, 0, 1);
  const FieldElement u1 = translation_rep(f2, 1);

  const StepFunction t = translate(oneD, u1);
  CHECK(t.support_level() == 1);
  // vanishes on D: cells 0 and 1 of the (1,1) grid are pD and 1+pD
  CHECK(value_at(t, FieldElement::zero(f2)) == Complex{0.0, 0.0});
  CHECK(value_at(t, FieldElement::monomial(f2, 0)) == Complex{0.0, 0.0});
  CHECK(value_at(t, u1) == Complex{1.0, 0.0});
  CHECK(norm(t) == norm(oneD));
  CHECK(inner_product(t, oneD) == Complex{0.0, 0.0});

  // char 2: translating twice by u(1) is the identity
  const StepFunction f = random_mean_zero(f2, 1, 2, 42);
  CHECK(bitwise_equal(translate(translate(f, u1), u1), f));
  CHECK(bitwise_equal(translate(f, FieldElement::zero(f2)), f));

  // off-grid translation must be refused
  CHECK_THROWS_AS(translate(f, FieldElement::monomial(f2, 2)), FieldError);
  CHECK_NOTHROW(translate(f.embedded(1, 3), FieldElement::monomial(f2, 2)));

  // unitary as an exact permutation
  for (int s = 0; s < 100; ++s) {
    const StepFunction g = random_mean_zero(f2, 1, 2, 1000 + s);
    CHECK(norm(translate(g, translation_rep(f2, s % 8))) == norm(g));
  }
}

TEST_CASE("dilation") {
  const auto f2 = make_field_q(2);
  const StepFunction oneD = StepFunction::indicator(f2, 0, 0);

  const StepFunction d = dilate(oneD, 1);
  CHECK(d.support_level() == 0);
  CHECK(d.resolution_level() == 1);
  CHECK(std::abs(value_at(d, FieldElement::zero(f2)) - Complex{std::sqrt(2.0), 0.0}) <
        1e-15);
  CHECK(value_at(d, FieldElement::monomial(f2, 0)) == Complex{0.0, 0.0});

  const StepFunction f = random_mean_zero(f2, 1, 2, 7);
  CHECK(bitwise_equal(dilate(f, 0), f));
  for (int j = -3; j <= 3; ++j) {
    const StepFunction dj = dilate(f, j);
    CHECK(std::abs(norm(dj) - norm(f)) <= 1e-12 * norm(f));
    CHECK(max_difference(dilate(dj, -j), f) <= 1e-12);
  }

  const auto f3 = make_field_q(3);
  for (int j = -3; j <= 3; ++j) {
    const StepFunction g = random_mean_zero(f3, 1, 1, 80 + j);
    CHECK(std::abs(norm(dilate(g, j)) - norm(g)) <= 1e-12 * norm(g));
  }
}

TEST_CASE("dilation commutes with lattice translation up to re-indexing") {
  for (const auto& fp : {make_field_q(2), make_field_q(3)}) {
    const long long q = fp->q();
    const StepFunction f = random_mean_zero(fp, 1, 2, 11);
    for (int j : {-1, -2})
      for (long long k = 0; k < 16; ++k) {
        const StepFunction lhs = dilate(translate(f, translation_rep(fp, k)), j);
        long long scale = 1;
        for (int i = 0; i < -j; ++i) scale *= q;
        const StepFunction rhs = translate(dilate(f, j), translation_rep(fp, k * scale));
        CHECK(bitwise_equal(lhs, rhs));
      }
  }
}

TEST_CASE("mean-zero projection") {
  const auto f2 = make_field_q(2);
  const StepFunction f = random_mean_zero(f2, 1, 2, 5);
  CHECK(max_difference(project_mean_zero(f), f) <= 1e-15);

  const StepFunction oneD = StepFunction::indicator(f2, 0, 0);
  CHECK(norm(project_mean_zero(oneD)) == 0.0);

  const StepFunction g = make(f2, 0, 1, {{2, 0}, {0, 0}});
  const StepFunction pg = project_mean_zero(g);
  CHECK(pg.values()[0] == Complex{1.0, 0.0});
  CHECK(pg.values()[1] == Complex{-1.0, 0.0});
  CHECK(std::abs(integral(pg)) <= 1e-14);
}

TEST_CASE("random mean-zero vectors sum to exact zero") {
  for (const auto& fp : {make_field_q(2), make_field_q(3)}) {
    for (std::uint64_t s = 0; s < 10; ++s) {
      const StepFunction f = random_mean_zero(fp, 1, 2, 100 + s);
      Complex sum{0, 0};
      for (const auto& v : f.raw_values()) sum += v;
      CHECK(sum == Complex{0.0, 0.0});
      CHECK(norm(f) >= 1.0);
      CHECK(norm(f) < 2.0);
    }
  }
}
