#pragma once

// Finite-resolution step functions: complex functions supported in P^{-M}
// and constant on cosets of P^{N}. Cell n carries the representative
// t^N u(n), which enumerates the q^{M+N} cosets exactly once.
//
// A StepFunction stores raw cell values together with a scalar amplitude
// applied to all of them. Translation and dilation permute raw values and
// touch only the amplitude, so compositions of the unitary operators stay
// exact cell permutations. Inner products sum raw values in a fixed radix-q
// tree grouped by the coarser argument's cells; mathematically-zero
// coefficients at the edge of the effective index ranges then come out as
// exact floating-point zeros, which the truncation checks rely on.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "lff/laurent.hpp"

namespace lff {

using Complex = std::complex<double>;

namespace detail {

// Per-field lookup tables for digit-level index arithmetic (GF(q) indices
// encode coordinate vectors through base-p digits).
struct DigitTables {
  int p, c, q;
  std::vector<int> add;  // add[a*q+b]
  std::vector<int> neg;  // neg[a]
  std::vector<int> mul;  // mul[a*q+b]

  explicit DigitTables(const FieldParams& fp) : p(fp.p()), c(fp.c()), q(fp.q()) {
    auto params = std::make_shared<const FieldParams>(fp);
    std::vector<GFElement> elems;
    elems.reserve(q);
    for (int a = 0; a < q; ++a) elems.push_back(GFElement::from_index(params, a));
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    for (int a = 0; a < q; ++a) {
      neg[a] = (-elems[a]).index();
      for (int b = 0; b < q; ++b) {
        add[a * q + b] = (elems[a] + elems[b]).index();
        mul[a * q + b] = (elems[a] * elems[b]).index();
      }
    }
  }
};

inline const DigitTables& digit_tables(const FieldParamsPtr& fp) {
  thread_local std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<DigitTables>>
      cache;
  auto key = std::make_tuple(fp->p(), fp->c(), fp->modulus());
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), std::make_unique<DigitTables>(*fp)).first;
  return *it->second;
}

// Fixed summation order: radix-q reduction aligned with the cell digits,
// children combined in ascending index order.
inline Complex radix_sum(const Complex* a, std::size_t len, int q) {
  if (len == 1) return a[0];
  const std::size_t sub = len / q;
  Complex s = radix_sum(a, sub, q);
  for (int b = 1; b < q; ++b) s += radix_sum(a + b * sub, sub, q);
  return s;
}

inline long long ipow(int q, int e) {
  long long r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace detail

/// q^{j/2} with a single rounding: exact integer powers for even j >= 0,
/// sqrt(q)-assisted otherwise.
inline double half_power(int q, int j) {
  const bool odd = j & 1;
  const int k = odd ? (j - 1) / 2 : j / 2;
  double r = 1.0;
  if (k >= 0)
    for (int i = 0; i < k; ++i) r *= q;
  else {
    double w = 1.0;
    for (int i = 0; i < -k; ++i) w *= q;
    r = 1.0 / w;
  }
  return odd ? r * std::sqrt(static_cast<double>(q)) : r;
}

/// Representative of cell n on the (M, N) grid: t^N u(n).
inline FieldElement cell_rep(const FieldParamsPtr& fp, int M, int N, long long n) {
  if (n < 0 || n >= detail::ipow(fp->q(), M + N))
    throw FieldError("cell index out of range");
  return FieldElement::monomial(fp, N) * translation_rep(fp, n);
}

class StepFunction {
 public:
  StepFunction(FieldParamsPtr params, int M, int N, std::vector<Complex> values,
               Complex amplitude = {1.0, 0.0})
      : params_(std::move(params)), M_(M), N_(N), coarse_(N), amp_(amplitude),
        raw_(std::move(values)) {
    if (M_ < 0 || N_ < 0) throw FieldError("support and resolution levels must be >= 0");
    if (static_cast<long long>(raw_.size()) != detail::ipow(params_->q(), M_ + N_))
      throw FieldError("value count must be q^(M+N)");
  }

  /// Indicator of P^{-M} at resolution N (all cells 1).
  static StepFunction indicator(const FieldParamsPtr& fp, int M, int N) {
    return StepFunction(fp, M, N,
                        std::vector<Complex>(detail::ipow(fp->q(), M + N), Complex{1.0, 0.0}));
  }

  const FieldParamsPtr& params() const { return params_; }
  int support_level() const { return M_; }
  int resolution_level() const { return N_; }
  /// Finest level k <= N such that the function is known to be constant on
  /// cosets of P^k. Dilation shifts it below zero even though the stored
  /// grid clamps at N = 0; inner products group sums at this level.
  int constancy_level() const { return coarse_; }
  long long cell_count() const { return static_cast<long long>(raw_.size()); }
  Complex amplitude() const { return amp_; }
  const std::vector<Complex>& raw_values() const { return raw_; }

  Complex value(long long n) const { return amp_ * raw_.at(n); }
  std::vector<Complex> values() const {
    std::vector<Complex> out(raw_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) out[i] = amp_ * raw_[i];
    return out;
  }

  /// Fold the amplitude into the stored values.
  StepFunction materialized() const {
    if (amp_ == Complex{1.0, 0.0}) return *this;
    return StepFunction(params_, M_, N_, values()).with_constancy_level(coarse_);
  }

  StepFunction with_constancy_level(int k) const {
    StepFunction out = *this;
    out.coarse_ = std::min(N_, std::max(k, -M_));
    return out;
  }

  /// Raw values re-gridded to (M2, N2) with N2 >= N. Refinement repeats each
  /// value over its q^{N2-N} sub-cells and zero-pads new support; M2 < M
  /// drops the cells beyond P^{-M2} (used when integrating against a factor
  /// supported there anyway).
  std::vector<Complex> raw_on_window(int M2, int N2) const {
    if (N2 < N_) throw FieldError("cannot coarsen the resolution of stored values");
    const long long per = detail::ipow(params_->q(), N2 - N_);
    const long long kept = detail::ipow(params_->q(), std::min(M2, M_) + N_);
    std::vector<Complex> out(detail::ipow(params_->q(), M2 + N2), Complex{0.0, 0.0});
    for (long long n = 0; n < kept * per; ++n) out[n] = raw_[n / per];
    return out;
  }

  /// Raw values re-gridded to a finer window (M2 >= M, N2 >= N). Embedding
  /// never changes function values.
  std::vector<Complex> embedded_raw(int M2, int N2) const {
    if (M2 < M_) throw FieldError("embedding must refine the window");
    return raw_on_window(M2, N2);
  }

  StepFunction embedded(int M2, int N2) const {
    return StepFunction(params_, M2, N2, embedded_raw(M2, N2), amp_)
        .with_constancy_level(coarse_);
  }

  friend StepFunction operator*(const StepFunction& f, Complex z) {
    return StepFunction(f.params_, f.M_, f.N_, f.raw_, f.amp_ * z)
        .with_constancy_level(f.coarse_);
  }
  friend StepFunction operator*(Complex z, const StepFunction& f) { return f * z; }

  friend StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    require_same_field(f.params_, g.params_);
    const int M = std::max(f.M_, g.M_), N = std::max(f.N_, g.N_);
    std::vector<Complex> a = f.embedded_raw(M, N), b = g.embedded_raw(M, N);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.amp_ * a[i] + g.amp_ * b[i];
    return StepFunction(f.params_, M, N, std::move(a));
  }
  friend StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return f + g * Complex{-1.0, 0.0};
  }

 private:
  FieldParamsPtr params_;
  int M_, N_;
  int coarse_;
  Complex amp_;
  std::vector<Complex> raw_;
};

namespace detail {

// Digits of x over exponents [-M, N-1] as GF(q) indices, low cell digit
// (exponent N-1) first. Returns false if x has support below -M.
inline bool grid_digits(const FieldElement& x, int M, int N, std::vector<int>& out) {
  out.assign(M + N, 0);
  for (const auto& [e, a] : x.digits()) {
    if (e >= N) continue;  // same coset of P^N
    if (e < -M) return false;
    out[N - 1 - e] = a.index();
  }
  return true;
}

inline long long digits_to_index(const std::vector<int>& d, int q) {
  long long n = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) n = n * q + d[i];
  return n;
}

}  // namespace detail

/// Raw value of f at an arbitrary point (0 outside the support).
inline Complex raw_value_at(const StepFunction& f, const FieldElement& x) {
  std::vector<int> d;
  if (!detail::grid_digits(x, f.support_level(), f.resolution_level(), d)) return {0.0, 0.0};
  return f.raw_values()[detail::digits_to_index(d, f.params()->q())];
}

inline Complex value_at(const StepFunction& f, const FieldElement& x) {
  return f.amplitude() * raw_value_at(f, x);
}

/// <f, g> = integral of f * conj(g), conjugate-linear in g. The integrand
/// lives on the intersection of the supports, so values are compared on
/// that window at the common refinement; the sum is grouped by the cells of
/// the coarser argument's true constancy level, inside which that argument
/// is a constant factor of an aligned radix-q block sum.
inline Complex inner_product(const StepFunction& f, const StepFunction& g) {
  require_same_field(f.params(), g.params());
  const int q = f.params()->q();
  const int M = std::min(f.support_level(), g.support_level());
  const int N = std::max(f.resolution_level(), g.resolution_level());
  const std::vector<Complex> a = f.raw_on_window(M, N);
  const std::vector<Complex> b = g.raw_on_window(M, N);

  const bool f_coarse = f.constancy_level() <= g.constancy_level();
  const int level = std::max(f_coarse ? f.constancy_level() : g.constancy_level(), -M);
  const long long block = detail::ipow(q, N - level);
  const long long blocks = static_cast<long long>(a.size()) / block;

  std::vector<Complex> terms(blocks);
  for (long long c = 0; c < blocks; ++c) {
    if (f_coarse)
      terms[c] = a[c * block] * std::conj(detail::radix_sum(b.data() + c * block, block, q));
    else
      terms[c] = detail::radix_sum(a.data() + c * block, block, q) * std::conj(b[c * block]);
  }
  const Complex s = blocks == 1 ? terms[0] : detail::radix_sum(terms.data(), terms.size(), q);
  const double measure = 1.0 / static_cast<double>(detail::ipow(q, N));
  return s * (f.amplitude() * std::conj(g.amplitude())) * measure;
}

inline double norm(const StepFunction& f) {
  const int q = f.params()->q();
  std::vector<Complex> sq(f.raw_values().size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = std::norm(f.raw_values()[i]);
  const Complex s = detail::radix_sum(sq.data(), sq.size(), q);
  const double measure = 1.0 / static_cast<double>(detail::ipow(q, f.resolution_level()));
  return std::sqrt(std::norm(f.amplitude()) * s.real() * measure);
}

inline Complex integral(const StepFunction& f) {
  const Complex s = detail::radix_sum(f.raw_values().data(), f.raw_values().size(),
                                      f.params()->q());
  const double measure = 1.0 / static_cast<double>(detail::ipow(f.params()->q(),
                                                                f.resolution_level()));
  return f.amplitude() * s * measure;
}

/// tau_y f = f(. - y). y must live on the grid of f (no support at
/// exponent >= N); refine first otherwise. Exact permutation of raw cells.
inline StepFunction translate(const StepFunction& f, const FieldElement& y) {
  require_same_field(f.params(), y.params());
  const int N = f.resolution_level();
  if (!y.is_zero() && y.digits().rbegin()->first >= N)
    throw FieldError("translation is not representable on the grid; refine first");
  int M = f.support_level();
  if (!y.is_zero()) M = std::max(M, -*y.valuation());

  const auto& fp = f.params();
  const int q = fp->q();
  const auto& tbl = detail::digit_tables(fp);
  std::vector<int> ydig;
  detail::grid_digits(y, M, N, ydig);

  const long long D = detail::ipow(q, M + N);
  const long long Dold = f.cell_count();
  std::vector<Complex> out(D);
  std::vector<int> d(M + N);
  for (long long n = 0; n < D; ++n) {
    long long t = n;
    bool inside = true;
    for (int i = 0; i < M + N; ++i) {
      d[i] = tbl.add[static_cast<int>(t % q) * q + tbl.neg[ydig[i]]];
      t /= q;
      if (d[i] != 0 && i >= f.support_level() + N) inside = false;
    }
    if (!inside) {
      out[n] = {0.0, 0.0};
      continue;
    }
    const long long m = detail::digits_to_index(d, q);
    out[n] = m < Dold ? f.raw_values()[m] : Complex{0.0, 0.0};
  }
  return StepFunction(fp, M, N, std::move(out), f.amplitude())
      .with_constancy_level(f.constancy_level());
}

/// delta_j f = q^{j/2} f(t^{-j} .). The natural window is (M-j, N+j),
/// clamped to >= 0; raw cells are re-indexed by the cell bijection and the
/// q^{j/2} factor goes into the amplitude.
inline StepFunction dilate(const StepFunction& f, int j) {
  if (j == 0) return f;
  const auto& fp = f.params();
  const int q = fp->q();
  const int M2 = std::max(0, f.support_level() - j);
  const int N2 = std::max(0, f.resolution_level() + j);
  const long long D = detail::ipow(q, M2 + N2);
  std::vector<Complex> out(D);

  // digit i of the new index sits at exponent N2-1-i; after multiplying by
  // t^{-j} it lands at N2-1-i-j, i.e. old digit position N-1-(N2-1-i-j).
  const int Mf = f.support_level(), Nf = f.resolution_level();
  std::vector<int> d(Mf + Nf);
  for (long long n = 0; n < D; ++n) {
    std::fill(d.begin(), d.end(), 0);
    long long t = n;
    bool inside = true;
    for (int i = 0; i < M2 + N2; ++i) {
      const int dig = static_cast<int>(t % q);
      t /= q;
      if (dig == 0) continue;
      const int e = N2 - 1 - i - j;
      if (e >= Nf) continue;  // truncated: same coset of P^{N_f}
      if (e < -Mf) {
        inside = false;
        break;
      }
      d[Nf - 1 - e] = dig;
    }
    out[n] = inside ? f.raw_values()[detail::digits_to_index(d, q)] : Complex{0.0, 0.0};
  }
  return StepFunction(fp, M2, N2, std::move(out), f.amplitude() * half_power(q, j))
      .with_constancy_level(f.constancy_level() + j);
}

/// f minus its mean density over P^{-M}; the result integrates to zero.
inline StepFunction project_mean_zero(const StepFunction& f) {
  const Complex mean = integral(f) / static_cast<double>(detail::ipow(f.params()->q(),
                                                                      f.support_level()));
  std::vector<Complex> v = f.values();
  for (auto& x : v) x -= mean;
  return StepFunction(f.params(), f.support_level(), f.resolution_level(), std::move(v));
}

/// Max cell-value difference on the common refinement.
inline double max_difference(const StepFunction& f, const StepFunction& g) {
  require_same_field(f.params(), g.params());
  const int M = std::max(f.support_level(), g.support_level());
  const int N = std::max(f.resolution_level(), g.resolution_level());
  const auto a = f.embedded_raw(M, N);
  const auto b = g.embedded_raw(M, N);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(f.amplitude() * a[i] - g.amplitude() * b[i]));
  return m;
}

inline bool approx_equal(const StepFunction& f, const StepFunction& g, double tol = 1e-9) {
  double scale = 0.0;
  for (const auto& x : f.raw_values()) scale = std::max(scale, std::abs(f.amplitude() * x));
  return max_difference(f, g) <= tol * std::max(1.0, scale);
}

/// Bitwise equality of materialized cell values on the common refinement.
inline bool bitwise_equal(const StepFunction& f, const StepFunction& g) {
  const int M = std::max(f.support_level(), g.support_level());
  const int N = std::max(f.resolution_level(), g.resolution_level());
  const auto a = f.embedded_raw(M, N);
  const auto b = g.embedded_raw(M, N);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (f.amplitude() * a[i] != g.amplitude() * b[i]) return false;
  return true;
}

}  // namespace lff
