#pragma once

// Arithmetic in the residue field GF(q), q = p^c, realized as
// GF(p)[X]/(m(X)) with the polynomial basis eps_j = X^j.

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lff {

class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of a mod b over GF(p); b monic. Coefficients constant-first.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    const int co = a[d];
    if (co == 0) continue;
    for (int i = 0; i <= db; ++i) {
      int& t = a[d - db + i];
      t = ((t - co * b[i]) % p + p) % p;
    }
  }
  a.resize(db);
  return a;
}

inline bool poly_is_zero(const std::vector<int>& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

// Irreducibility by trial division against all monic divisors of degree
// 1..deg/2. Fine at the field sizes this library targets.
inline bool is_irreducible(const std::vector<int>& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  if (deg < 1 || m[deg] != 1) return false;
  if (deg == 1) return true;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    std::vector<int> div(dd + 1, 0);
    div[dd] = 1;
    // enumerate all p^dd monic divisors of degree dd
    long total = 1;
    for (int i = 0; i < dd; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      if (poly_is_zero(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Parameters of the residue field GF(q) = GF(p)[X]/(m(X)).
///
/// `modulus` is the monic irreducible polynomial m, listed constant term
/// first (length c+1). For c = 1 the modulus is immaterial beyond shape and
/// arithmetic is plain integers mod p.
class FieldParams {
 public:
  FieldParams(int p, int c, std::vector<int> modulus)
      : p_(p), c_(c), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_)) throw FieldError("p must be prime");
    if (c_ < 1) throw FieldError("c must be positive");
    if (static_cast<int>(modulus_.size()) != c_ + 1)
      throw FieldError("modulus must have degree c");
    for (int& x : modulus_) x = ((x % p_) + p_) % p_;
    if (modulus_[c_] != 1) throw FieldError("modulus must be monic");
    if (!detail::is_irreducible(modulus_, p_))
      throw FieldError("modulus is reducible over GF(p)");
    q_ = 1;
    for (int i = 0; i < c_; ++i) {
      q_ *= p_;
      if (q_ > (1 << 20)) throw FieldError("q too large");
    }
  }

  static FieldParams with_default_modulus(int p, int c) {
    if (c == 1) return FieldParams(p, 1, {0, 1});
    if (p == 2 && c == 2) return FieldParams(2, 2, {1, 1, 1});
    if (p == 2 && c == 3) return FieldParams(2, 3, {1, 1, 0, 1});
    if (p == 3 && c == 2) return FieldParams(3, 2, {2, 2, 1});
    throw FieldError("no default modulus shipped for p=" + std::to_string(p) +
                     ", c=" + std::to_string(c) + "; supply one explicitly");
  }

  int p() const { return p_; }
  int c() const { return c_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  friend bool operator==(const FieldParams& a, const FieldParams& b) {
    return a.p_ == b.p_ && a.c_ == b.c_ && a.modulus_ == b.modulus_;
  }

 private:
  int p_, c_, q_;
  std::vector<int> modulus_;
};

using FieldParamsPtr = std::shared_ptr<const FieldParams>;

inline FieldParamsPtr make_field(int p, int c, std::vector<int> modulus) {
  return std::make_shared<const FieldParams>(p, c, std::move(modulus));
}
inline FieldParamsPtr make_field(int p, int c) {
  return std::make_shared<const FieldParams>(FieldParams::with_default_modulus(p, c));
}
/// Convenience for prime q (c = 1).
inline FieldParamsPtr make_field_q(int q) { return make_field(q, 1); }

inline void require_same_field(const FieldParamsPtr& a, const FieldParamsPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw FieldError("mismatched field parameters");
}

/// An element of GF(q) as its coordinate vector over GF(p) in the basis
/// {1, X, ..., X^{c-1}}. Coordinate i is the coefficient of X^i.
class GFElement {
 public:
  GFElement() = default;
  GFElement(FieldParamsPtr params, std::vector<int> coords)
      : params_(std::move(params)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != params_->c())
      throw FieldError("coordinate vector has wrong length");
    for (int& x : coords_) x = ((x % params_->p()) + params_->p()) % params_->p();
  }

  static GFElement zero(const FieldParamsPtr& fp) {
    return GFElement(fp, std::vector<int>(fp->c(), 0));
  }
  static GFElement one(const FieldParamsPtr& fp) { return basis(fp, 0); }
  /// eps_j = X^j.
  static GFElement basis(const FieldParamsPtr& fp, int j) {
    std::vector<int> v(fp->c(), 0);
    v.at(j) = 1;
    return GFElement(fp, std::move(v));
  }
  /// Element whose coordinates are the base-p digits of n, 0 <= n < q.
  static GFElement from_index(const FieldParamsPtr& fp, int n) {
    std::vector<int> v(fp->c());
    for (int i = 0; i < fp->c(); ++i) {
      v[i] = n % fp->p();
      n /= fp->p();
    }
    if (n != 0) throw FieldError("index out of range");
    return GFElement(fp, std::move(v));
  }

  const FieldParamsPtr& params() const { return params_; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const { return detail::poly_is_zero(coords_); }
  /// Integer in [0, q) whose base-p digits are the coordinates.
  int index() const {
    int n = 0;
    for (int i = params_->c() - 1; i >= 0; --i) n = n * params_->p() + coords_[i];
    return n;
  }

  friend GFElement operator+(const GFElement& a, const GFElement& b) {
    require_same_field(a.params_, b.params_);
    std::vector<int> v(a.coords_);
    for (size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + b.coords_[i]) % a.params_->p();
    return GFElement(a.params_, std::move(v));
  }
  friend GFElement operator-(const GFElement& a) {
    std::vector<int> v(a.coords_);
    for (int& x : v) x = (a.params_->p() - x) % a.params_->p();
    return GFElement(a.params_, std::move(v));
  }
  friend GFElement operator-(const GFElement& a, const GFElement& b) { return a + (-b); }
  friend GFElement operator*(const GFElement& a, const GFElement& b) {
    require_same_field(a.params_, b.params_);
    const int p = a.params_->p(), c = a.params_->c();
    std::vector<int> prod(2 * c - 1, 0);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) prod[i + j] = (prod[i + j] + a.coords_[i] * b.coords_[j]) % p;
    prod = detail::poly_mod(std::move(prod), a.params_->modulus(), p);
    prod.resize(c);
    return GFElement(a.params_, std::move(prod));
  }
  friend bool operator==(const GFElement& a, const GFElement& b) {
    return a.coords_ == b.coords_;
  }

 private:
  FieldParamsPtr params_;
  std::vector<int> coords_;
};

}  // namespace lff
