#pragma once

// Elements of K = GF(q)((t)) restricted to finite Laurent polynomials,
// which is all the machinery downstream ever touches. The prime element
// is t itself, |t| = 1/q, and the ring of integers D is {support >= 0}.
//
// Also houses the translation lattice u(n) (one coset representative of D
// per index n), its inverse, and the canonical character chi.

#include <complex>
#include <map>
#include <optional>

#include "lff/field.hpp"

namespace lff {

/// Finite Laurent polynomial sum_i a_i t^i with GF(q) coefficients.
/// Zero coefficients are never stored; zero has an empty table.
class FieldElement {
 public:
  explicit FieldElement(FieldParamsPtr params) : params_(std::move(params)) {}

  static FieldElement zero(const FieldParamsPtr& fp) { return FieldElement(fp); }
  /// a * t^e for a given by its GF(q) index.
  static FieldElement monomial(const FieldParamsPtr& fp, int exponent, int a = 1) {
    FieldElement x(fp);
    x.set(exponent, GFElement::from_index(fp, ((a % fp->q()) + fp->q()) % fp->q()));
    return x;
  }

  const FieldParamsPtr& params() const { return params_; }
  const std::map<int, GFElement>& digits() const { return digits_; }
  bool is_zero() const { return digits_.empty(); }

  /// min stored exponent; nullopt for zero.
  std::optional<int> valuation() const {
    if (digits_.empty()) return std::nullopt;
    return digits_.begin()->first;
  }
  /// |x| = q^k reported as the exponent k; zero flag via is_zero().
  int abs_exponent() const {
    auto v = valuation();
    if (!v) throw FieldError("abs exponent of zero is undefined");
    return -*v;
  }

  GFElement coeff(int exponent) const {
    auto it = digits_.find(exponent);
    return it == digits_.end() ? GFElement::zero(params_) : it->second;
  }
  void set(int exponent, const GFElement& a) {
    if (a.is_zero())
      digits_.erase(exponent);
    else
      digits_.insert_or_assign(exponent, a);
  }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    require_same_field(x.params_, y.params_);
    FieldElement out = x;
    for (const auto& [e, a] : y.digits_) out.set(e, out.coeff(e) + a);
    return out;
  }
  friend FieldElement operator-(const FieldElement& x) {
    FieldElement out(x.params_);
    for (const auto& [e, a] : x.digits_) out.digits_.emplace(e, -a);
    return out;
  }
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    return x + (-y);
  }
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    require_same_field(x.params_, y.params_);
    FieldElement out(x.params_);
    for (const auto& [e1, a1] : x.digits_)
      for (const auto& [e2, a2] : y.digits_) out.set(e1 + e2, out.coeff(e1 + e2) + a1 * a2);
    return out;
  }
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.digits_ == y.digits_;
  }

 private:
  FieldParamsPtr params_;
  std::map<int, GFElement> digits_;
};

/// u(n): the n-th element of the translation lattice Lambda. The base-q
/// digit b_j of n becomes the coefficient of t^{-(j+1)}, with b_j read as a
/// GF(q) element through its base-p digits. u is a bijection from
/// nonnegative integers onto {support < 0}, u(0) = 0, and
/// u(r q^k + s) = u(r) t^{-k} + u(s) for 0 <= s < q^k.
inline FieldElement translation_rep(const FieldParamsPtr& fp, long long n) {
  if (n < 0) throw FieldError("translation index must be nonnegative");
  FieldElement x(fp);
  int j = 0;
  while (n != 0) {
    const int b = static_cast<int>(n % fp->q());
    if (b != 0) x.set(-(j + 1), GFElement::from_index(fp, b));
    n /= fp->q();
    ++j;
  }
  return x;
}

/// Inverse of translation_rep. Rejects elements with support at
/// exponent >= 0 (they are not in Lambda).
inline long long translation_index(const FieldElement& x) {
  long long n = 0;
  for (const auto& [e, a] : x.digits()) {
    if (e >= 0) throw FieldError("element is not in the translation lattice");
    long long pw = 1;
    for (int i = 0; i < -e - 1; ++i) pw *= x.params()->q();
    n += static_cast<long long>(a.index()) * pw;
  }
  return n;
}

/// chi(x) as an exact p-th root of unity index: chi(x) = exp(2 pi i a / p)
/// where a is the eps_0-coordinate of the coefficient of t^{-1}. chi is an
/// additive character, trivial on D, nontrivial on P^{-1}.
inline int character_index(const FieldElement& x) {
  return x.coeff(-1).coords()[0];
}

/// exp(2 pi i a / p) with exact components at the quarter and sixth points
/// and bit-exact conjugation symmetry.
inline std::complex<double> root_of_unity(int a, int p) {
  a = ((a % p) + p) % p;
  if (2 * a > p) return std::conj(root_of_unity(p - a, p));
  if (a == 0) return {1.0, 0.0};
  if (2 * a == p) return {-1.0, 0.0};
  if (4 * a == p) return {0.0, 1.0};
  if (6 * a == p) return {0.5, std::sqrt(3.0) / 2.0};
  if (3 * a == p) return {-0.5, std::sqrt(3.0) / 2.0};
  const double th = 2.0 * 3.14159265358979323846 * a / p;
  return {std::cos(th), std::sin(th)};
}

inline std::complex<double> character_value(const FieldElement& x) {
  return root_of_unity(character_index(x), x.params()->p());
}

/// chi_y(x) = chi(y x), as an exact index mod p.
inline int character_index(const FieldElement& y, const FieldElement& x) {
  return character_index(y * x);
}

}  // namespace lff
