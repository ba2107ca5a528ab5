#pragma once

// Deterministic spectrum of a complex Hermitian matrix: Householder
// reduction to real symmetric tridiagonal form followed by implicit-shift
// QL iteration, eigenvalues only. Fixed elimination and iteration order,
// so identical input yields identical output bits.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace lff {

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() : n_(0) {}
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, std::complex<double>{0.0, 0.0}) {}

  std::size_t size() const { return n_; }
  std::complex<double>& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const std::complex<double>& operator()(std::size_t i, std::size_t j) const {
    return a_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<std::complex<double>> a_;
};

namespace detail {

inline double frobenius(const Matrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// One Householder similarity per column, then a diagonal phase similarity
// to make the subdiagonal real.
inline void tridiagonalize(Matrix a, std::vector<double>& d, std::vector<double>& e) {
  using C = std::complex<double>;
  const std::size_t n = a.size();
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  if (n == 0) return;
  std::vector<C> sub(n, C{0.0, 0.0});  // complex subdiagonal

  std::vector<C> v(n), w(n), u(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // rows below the diagonal
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm2 += std::norm(a(k + 1 + i, k));
    const C x0 = a(k + 1, k);
    if (xnorm2 == 0.0) {
      sub[k] = C{0.0, 0.0};
      continue;
    }
    const double xnorm = std::sqrt(xnorm2);
    const C phase = std::abs(x0) == 0.0 ? C{1.0, 0.0} : x0 / std::abs(x0);
    const C alpha = -phase * xnorm;

    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(k + 1 + i, k);
      if (i == 0) v[i] -= alpha;
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) {
      sub[k] = alpha;
      continue;
    }
    const double vs = 1.0 / std::sqrt(vnorm2);
    for (std::size_t i = 0; i < m; ++i) v[i] *= vs;

    // A_sub <- (I - 2 v v^H) A_sub (I - 2 v v^H)
    for (std::size_t i = 0; i < m; ++i) {
      C s{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      w[i] = s;
    }
    C kappa{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) kappa += std::conj(v[i]) * w[i];
    for (std::size_t i = 0; i < m; ++i) u[i] = 2.0 * w[i] - 2.0 * kappa * v[i];
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a(k + 1 + i, k + 1 + j) -= v[i] * std::conj(u[j]) + u[i] * std::conj(v[j]);

    sub[k] = alpha;
  }
  if (n >= 2) sub[n - 2] = a(n - 1, n - 2);

  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  // phase out the subdiagonal
  for (std::size_t k = 0; k + 1 < n; ++k) e[k + 1] = std::abs(sub[k]);
}

// Implicit-shift QL on a symmetric tridiagonal matrix; e[0] unused,
// e[i] couples d[i-1] and d[i].
inline void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.erase(e.begin());
  e.push_back(0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
      }
      if (m != l) {
        if (++iter == 64) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool broke = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            broke = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (broke) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

/// Eigenvalues of a Hermitian matrix, ascending. Rejects inputs whose
/// Hermitian defect exceeds 1e-12 relative in Frobenius norm.
inline std::vector<double> hermitian_spectrum(const Matrix& h) {
  const std::size_t n = h.size();
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) defect += std::norm(h(i, j) - std::conj(h(j, i)));
  const double scale = detail::frobenius(h);
  if (std::sqrt(defect) > 1e-12 * std::max(scale, 1e-300))
    throw std::invalid_argument("matrix is not Hermitian");

  std::vector<double> d, e;
  detail::tridiagonalize(h, d, e);
  detail::tridiagonal_eigenvalues(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace lff
