#include <catch2/catch_amalgamated.hpp>

#include "lff/checks.hpp"

using namespace lff;

TEST_CASE("effective index ranges") {
  const auto f2 = make_field_q(2);
  const AffineSystemSpec spec(haar_generators(f2), SystemKind::affine);

  const auto ranges = effective_ranges(spec, 1, 2);
  // haar window (0,1), test window (1,2): j in [-(1+1), 2+0]
  CHECK(ranges.front().j == -2);
  CHECK(ranges.back().j == 2);
  for (const auto& r : ranges) {
    if (r.j == 2) CHECK(r.k_count == 8);  // |u(k)| <= q^{M_f+j} = q^3
    if (r.j == -2) CHECK(r.k_count == 1);
  }

  const auto idx = effective_index_set(spec, 1, 2);
  long long expect = 0;
  for (const auto& r : ranges) expect += r.k_count;
  CHECK(static_cast<long long>(idx.size()) == expect);
}

TEST_CASE("the affine form of the haar basis reproduces the inner product") {
  for (int q : {2, 3}) {
    const auto fp = make_field_q(q);
    const auto H = haar_generators(fp);
    for (std::uint64_t s = 0; s < 3; ++s) {
      const StepFunction f = random_mean_zero(fp, 1, 2, 300 + s);
      const StepFunction g = random_mean_zero(fp, 1, 2, 400 + s);
      const double n2 = inner_product(f, f).real();
      CHECK(std::abs(form_value(FormKind::K, H, H, f, f) - Complex{n2, 0}) <= 1e-9 * n2);
      // K_j at j = 0 equals Ktilde_j at j = 0
      CHECK(std::abs(form_value(FormKind::Kj, H, H, f, g, 0) -
                     form_value(FormKind::Ktilde_j, H, H, f, g, 0)) <= 1e-12);
    }
  }
}

TEST_CASE("form positivity and degenerate inputs") {
  const auto fp = make_field_q(2);
  const auto H = haar_generators(fp);
  const StepFunction f = random_mean_zero(fp, 1, 2, 17);
  CHECK(form_value(FormKind::K, H, H, f, f).real() >= -1e-12);
  CHECK(form_value(FormKind::Ktilde, H, H, f, f).real() >= -1e-12);

  const StepFunction zero(fp, 1, 2, std::vector<Complex>(8, Complex{0, 0}));
  CHECK(form_value(FormKind::K, H, H, zero, zero) == Complex{0.0, 0.0});

  CHECK_THROWS_AS(form_value(FormKind::K, H, H, StepFunction::indicator(fp, 0, 1), f),
                  FieldError);
  const auto H3 = haar_generators(make_field_q(3));
  CHECK_THROWS_AS(form_value(FormKind::K, H, H3, f, f), FieldError);
}

TEST_CASE("dilation invariance of K and translation invariance of Ktilde") {
  const auto fp = make_field_q(2);
  const auto H = haar_generators(fp);
  const std::vector<StepFunction> P = {perturbed_generator_q2(fp)};
  const StepFunction f = random_mean_zero(fp, 1, 2, 21);
  const StepFunction g = random_mean_zero(fp, 1, 2, 22);

  const Complex K0 = form_value(FormKind::K, P, P, f, g);
  for (int N : {-1, 0, 1, 2})
    CHECK(std::abs(form_value(FormKind::K, P, P, dilate(f, N), dilate(g, N)) - K0) <= 1e-9);

  const Complex Kt0 = form_value(FormKind::Ktilde, P, P, f, g);
  for (long long k = 1; k < 8; ++k) {
    const FieldElement y = translation_rep(fp, k);
    CHECK(std::abs(form_value(FormKind::Ktilde, P, P, translate(f, y), translate(g, y)) -
                   Kt0) <= 1e-9);
  }
  (void)H;
}

TEST_CASE("averaging identity") {
  const auto fp = make_field_q(2);
  const auto H = haar_generators(fp);
  const StepFunction f = random_mean_zero(fp, 1, 2, 31);
  const StepFunction g = random_mean_zero(fp, 1, 2, 32);

  CHECK(quasi_identity_defect(H, H, f, g, 1, 0) <= 1e-9);
  CHECK(quasi_identity_defect(H, H, f, g, 2, -2) <= 1e-9);

  const StepFunction zero(fp, 1, 2, std::vector<Complex>(8, Complex{0, 0}));
  CHECK(quasi_identity_defect(H, H, zero, zero, 1, 0) == 0.0);

  CHECK_THROWS_AS(quasi_identity_defect(H, H, f, g, 1, -2), FieldError);
}

TEST_CASE("restricted bounds of the haar systems") {
  const auto fp = make_field_q(2);
  const auto H = haar_generators(fp);
  const BoundsReport r = restricted_frame_bounds(AffineSystemSpec(H, SystemKind::affine), 1, 2);
  CHECK(r.spectrum.size() == 7);
  CHECK(std::abs(r.lambda_min - 1.0) <= 1e-9);
  CHECK(std::abs(r.lambda_max - 1.0) <= 1e-9);

  const BoundsReport rq =
      restricted_frame_bounds(AffineSystemSpec(H, SystemKind::quasiAffine), 1, 2);
  CHECK(std::abs(rq.lambda_min - 1.0) <= 1e-9);
  CHECK(std::abs(rq.lambda_max - 1.0) <= 1e-9);

  // scaling the generators by 2 scales every eigenvalue by 4, and the
  // scaled system stays tight with equal affine and quasi-affine bounds
  const std::vector<StepFunction> twoH = {H[0] * Complex{2, 0}};
  for (const auto kind : {SystemKind::affine, SystemKind::quasiAffine}) {
    const BoundsReport r2 = restricted_frame_bounds(AffineSystemSpec(twoH, kind), 1, 2);
    CHECK(std::abs(r2.lambda_min - 4.0) <= 4e-9);
    CHECK(std::abs(r2.lambda_max - 4.0) <= 4e-9);
  }
}

TEST_CASE("perturbed generator bracketing") {
  for (const auto& r : check_perturbed_bracketing(make_field_q(2))) {
    INFO(r.name << " " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("duality and invariance witnesses") {
  for (const auto& r : check_duality(make_field_q(2))) {
    INFO(r.name << " " << r.detail);
    CHECK(r.pass);
  }
  for (const auto& r : check_invariance(make_field_q(2))) {
    INFO(r.name << " " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("averaged co-affine energy") {
  const auto fp = make_field_q(2);
  const AffineSystemSpec co(haar_generators(fp), SystemKind::coAffine);

  const StepFunction zero(fp, 1, 2, std::vector<Complex>(8, Complex{0, 0}));
  CHECK(wf_average(co, zero, WfSide::time) == 0.0);
  CHECK(wf_average(co, zero, WfSide::fourier) == 0.0);

  const StepFunction f1 = shell_test_function(fp, 1);
  CHECK(std::abs(wf_average(co, f1, WfSide::time) - 1.0) <= 1e-9);
  CHECK(std::abs(wf_average(co, f1, WfSide::fourier) - 1.0) <= 1e-9);
  const StepFunction f3 = shell_test_function(fp, 3);
  CHECK(std::abs(wf_average(co, f3, WfSide::time) - 0.25) <= 1e-9);
  CHECK(std::abs(wf_average(co, f3, WfSide::fourier) - 0.25) <= 1e-9);
}

TEST_CASE("negative-scale tails") {
  for (const auto& r : check_lemma33(make_field_q(2))) {
    INFO(r.name << " " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("padding the index ranges adds exact zeros") {
  for (const auto& r : check_exact_truncation(make_field_q(2), make_field_q(3))) {
    INFO(r.name << " " << r.detail);
    CHECK(r.pass);
  }
}
