#include <catch2/catch_amalgamated.hpp>

#include "lff/laurent.hpp"

using namespace lff;
using Complex = std::complex<double>;

TEST_CASE("field parameter validation") {
  CHECK_THROWS_AS(make_field(4, 1, {0, 1}), FieldError);           // p not prime
  CHECK_THROWS_AS(make_field(2, 2, {1, 0, 1}), FieldError);        // X^2+1 = (X+1)^2
  CHECK_THROWS_AS(make_field(2, 2, {0, 0, 1}), FieldError);        // X^2 reducible
  CHECK_THROWS_AS(make_field(2, 2, {1, 1, 2}), FieldError);        // not monic (2 = 0 mod 2)
  CHECK_THROWS_AS(make_field(2, 2, {1, 1}), FieldError);           // wrong degree
  CHECK(make_field(2, 2, {1, 1, 1})->q() == 4);
  CHECK(make_field(2, 3)->q() == 8);
  CHECK(make_field_q(5)->q() == 5);
}

TEST_CASE("gf arithmetic in GF(2) and GF(4)") {
  const auto f2 = make_field_q(2);
  const auto one = GFElement::one(f2);
  CHECK((one + one).is_zero());

  const auto f4 = make_field(2, 2, {1, 1, 1});
  const auto e1 = GFElement::basis(f4, 1);
  const auto prod = e1 * e1;  // X^2 = X + 1
  CHECK(prod.coords() == std::vector<int>{1, 1});
  CHECK(prod == e1 + GFElement::one(f4));

  CHECK_THROWS_AS(GFElement::one(f2) + GFElement::one(f4), FieldError);
}

TEST_CASE("GF(q) field axioms hold exhaustively for q in {4, 8, 9}") {
  for (const auto& fp : {make_field(2, 2), make_field(2, 3), make_field(3, 2, {2, 2, 1})}) {
    const int q = fp->q();
    std::vector<GFElement> el;
    for (int a = 0; a < q; ++a) el.push_back(GFElement::from_index(fp, a));
    for (int a = 0; a < q; ++a) {
      CHECK(el[a] * GFElement::one(fp) == el[a]);
      CHECK((el[a] + (-el[a])).is_zero());
      for (int b = 0; b < q; ++b) {
        CHECK(el[a] + el[b] == el[b] + el[a]);
        CHECK(el[a] * el[b] == el[b] * el[a]);
        for (int c = 0; c < q; ++c) {
          CHECK((el[a] + el[b]) + el[c] == el[a] + (el[b] + el[c]));
          CHECK((el[a] * el[b]) * el[c] == el[a] * (el[b] * el[c]));
          CHECK(el[a] * (el[b] + el[c]) == el[a] * el[b] + el[a] * el[c]);
        }
      }
    }
    // nonzero rows of the multiplication table are permutations (inverses exist)
    for (int a = 1; a < q; ++a) {
      std::vector<char> seen(q, 0);
      for (int b = 0; b < q; ++b) seen[(el[a] * el[b]).index()] = 1;
      CHECK(std::count(seen.begin(), seen.end(), 1) == q);
    }
  }
}

TEST_CASE("Laurent polynomial arithmetic") {
  const auto f2 = make_field_q(2);
  const auto tinv = FieldElement::monomial(f2, -1);
  CHECK((tinv + tinv).is_zero());
  CHECK(tinv * tinv == FieldElement::monomial(f2, -2));

  const auto x = tinv + FieldElement::monomial(f2, 0);
  CHECK(x * x == FieldElement::monomial(f2, -2) + FieldElement::monomial(f2, 0));
}

TEST_CASE("absolute value") {
  const auto f2 = make_field_q(2);
  CHECK(FieldElement::zero(f2).is_zero());
  const auto x = FieldElement::monomial(f2, -2) + FieldElement::monomial(f2, -1);
  CHECK(x.abs_exponent() == 2);

  const auto f3 = make_field_q(3);
  CHECK(FieldElement::monomial(f3, 5).abs_exponent() == -5);

  // multiplicative, ultrametric, with equality when valuations differ
  {
    std::uint64_t s = 99;
    auto rnd = [&s]() {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      return s >> 33;
    };
    for (const auto& fp : {make_field_q(2), make_field_q(3)}) {
      for (int it = 0; it < 10000; ++it) {
        FieldElement a(fp), b(fp);
        for (int e = -4; e <= 4; ++e) {
          a.set(e, GFElement::from_index(fp, static_cast<int>(rnd() % fp->q())));
          b.set(e, GFElement::from_index(fp, static_cast<int>(rnd() % fp->q())));
        }
        if (!a.is_zero() && !b.is_zero()) {
          CHECK((a * b).abs_exponent() == a.abs_exponent() + b.abs_exponent());
          const auto sum = a + b;
          if (!sum.is_zero()) {
            const int am = std::max(a.abs_exponent(), b.abs_exponent());
            CHECK(sum.abs_exponent() <= am);
            if (a.abs_exponent() != b.abs_exponent()) CHECK(sum.abs_exponent() == am);
          }
        }
      }
    }
  }
}

TEST_CASE("translation lattice u(n)") {
  const auto f2 = make_field_q(2);
  CHECK(translation_rep(f2, 0).is_zero());
  CHECK(translation_rep(f2, 3) ==
        FieldElement::monomial(f2, -2) + FieldElement::monomial(f2, -1));
  CHECK(translation_rep(f2, 5).abs_exponent() == 3);  // 4 <= 5 < 8

  for (long long n = 0; n < 1024; ++n)
    CHECK(translation_index(translation_rep(f2, n)) == n);

  const auto f3 = make_field_q(3);
  CHECK(translation_index(FieldElement::monomial(f3, -1, 2)) == 2);

  CHECK_THROWS_AS(translation_index(FieldElement::monomial(f2, 0)), FieldError);
  CHECK_THROWS_AS(translation_index(FieldElement::monomial(f2, 2)), FieldError);

  // u(r q^k + s) = u(r) t^-k + u(s)
  for (const auto& fp : {f2, f3}) {
    const int q = fp->q();
    for (long long r = 0; r < q * q; ++r)
      for (int k = 0; k <= 3; ++k) {
        long long qk = 1;
        for (int i = 0; i < k; ++i) qk *= q;
        for (long long s = 0; s < qk; ++s)
          CHECK(translation_rep(fp, r * qk + s) ==
                translation_rep(fp, r) * FieldElement::monomial(fp, -k) +
                    translation_rep(fp, s));
      }
  }
}

TEST_CASE("the canonical character") {
  const auto f2 = make_field_q(2);
  CHECK((character_value(FieldElement::monomial(f2, -1)) == Complex{-1.0, 0.0}));
  CHECK((character_value(FieldElement::monomial(f2, 0)) == Complex{1.0, 0.0}));
  CHECK((character_value(FieldElement::monomial(f2, -2)) == Complex{1.0, 0.0}));

  const auto f4 = make_field(2, 2);
  // eps_1 t^-1 has no eps_0 component at t^-1
  FieldElement y(f4);
  y.set(-1, GFElement::basis(f4, 1));
  CHECK(character_index(y) == 0);

  CHECK(std::abs(root_of_unity(1, 3)) == Catch::Approx(1.0).epsilon(1e-15));
  CHECK((root_of_unity(0, 5) == Complex{1.0, 0.0}));
  CHECK((root_of_unity(2, 4) == Complex{-1.0, 0.0}));
  CHECK((root_of_unity(1, 4) == Complex{0.0, 1.0}));
}
