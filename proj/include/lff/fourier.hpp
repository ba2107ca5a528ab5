#pragma once

// Fourier transform on step functions against the canonical character.
// A function with window (M, N) transforms to window (N, M): supported in
// P^{-N}, constant on cosets of P^{M}. The frequency grid reuses the cell
// convention (representatives t^M u(m)).
//
// Two implementations: a direct O(D^2) character sum (the reference) and a
// radix-q tensor factorization in O(D log_q D * q), the Vilenkin analogue
// of the fast Walsh-Hadamard transform. They agree to 1e-12.

#include "lff/step_function.hpp"

namespace lff {

enum class FtDirection { forward, inverse };

namespace detail {

// chi-index of (t^{Mxi} u(m)) * (t^{Nx} u(n)): with digits m_j, n_i placed at
// exponents Mxi-1-j and Nx-1-i, the t^{-1} coefficient collects the pairs
// with i + j = S - 1 on the combined scale S = M + N of each factor.
struct FtPlan {
  int q, p, S;
  std::vector<int> mul;       // GF(q) index multiplication table
  std::vector<int> eps0;      // eps0-coordinate of a GF(q) index
  std::vector<Complex> root;  // p-th roots of unity
  std::vector<Complex> root_conj;

  FtPlan(const FieldParamsPtr& fp, int S_) : q(fp->q()), p(fp->p()), S(S_) {
    const auto& tbl = digit_tables(fp);
    mul = tbl.mul;
    eps0.resize(q);
    for (int a = 0; a < q; ++a) eps0[a] = a % p;
    root.resize(p);
    root_conj.resize(p);
    for (int a = 0; a < p; ++a) {
      root[a] = root_of_unity(a, p);
      root_conj[a] = std::conj(root[a]);
    }
  }

  int chi_index_of_pair(long long m, long long n) const {
    int acc = 0;
    for (int i = 0; i < S; ++i) {
      const int ni = static_cast<int>(n % q);
      n /= q;
      // partner digit of m at position S-1-i
      long long mm = m;
      for (int t = 0; t < S - 1 - i; ++t) mm /= q;
      const int mj = static_cast<int>(mm % q);
      acc += eps0[mul[ni * q + mj]];
    }
    return acc % p;
  }
};

inline void digit_reverse_permute(std::vector<Complex>& v, int q, int S) {
  std::vector<Complex> out(v.size());
  for (long long n = 0; n < static_cast<long long>(v.size()); ++n) {
    long long r = 0, t = n;
    for (int i = 0; i < S; ++i) {
      r = r * q + (t % q);
      t /= q;
    }
    out[r] = v[n];
  }
  v.swap(out);
}

}  // namespace detail

/// Direct character-sum transform.
inline StepFunction ft_reference(const StepFunction& f, FtDirection dir) {
  const auto g = f.materialized();
  const auto& fp = g.params();
  const int q = fp->q();
  const int M2 = g.resolution_level(), N2 = g.support_level();
  const int S = M2 + N2;
  const long long D = g.cell_count();
  detail::FtPlan plan(fp, S);
  const double measure = 1.0 / static_cast<double>(detail::ipow(q, g.resolution_level()));
  std::vector<Complex> out(D);
  std::vector<Complex> terms(D);
  for (long long m = 0; m < D; ++m) {
    for (long long n = 0; n < D; ++n) {
      const int a = plan.chi_index_of_pair(m, n);
      const Complex ker = dir == FtDirection::forward ? plan.root_conj[a] : plan.root[a];
      terms[n] = g.raw_values()[n] * ker;
    }
    out[m] = detail::radix_sum(terms.data(), D, q) * measure;
  }
  return StepFunction(fp, M2, N2, std::move(out));
}

/// Radix-q tensor factorization: one q-point kernel pass per digit followed
/// by a base-q digit reversal.
inline StepFunction ft_fast(const StepFunction& f, FtDirection dir) {
  const auto g = f.materialized();
  const auto& fp = g.params();
  const int q = fp->q();
  const int M2 = g.resolution_level(), N2 = g.support_level();
  const int S = M2 + N2;
  const long long D = g.cell_count();
  detail::FtPlan plan(fp, S);

  // q x q kernel K[b][a] = chi-root at index eps0(a*b)
  std::vector<Complex> K(q * q);
  for (int b = 0; b < q; ++b)
    for (int a = 0; a < q; ++a) {
      const int idx = plan.eps0[plan.mul[a * q + b]];
      K[b * q + a] = dir == FtDirection::forward ? plan.root_conj[idx] : plan.root[idx];
    }

  std::vector<Complex> v = g.raw_values();
  std::vector<Complex> tmp(q);
  long long stride = 1;
  for (int stage = 0; stage < S; ++stage) {
    for (long long base = 0; base < D; base += stride * q) {
      for (long long off = 0; off < stride; ++off) {
        for (int b = 0; b < q; ++b) {
          Complex s{0.0, 0.0};
          for (int a = 0; a < q; ++a) s += K[b * q + a] * v[base + off + a * stride];
          tmp[b] = s;
        }
        for (int b = 0; b < q; ++b) v[base + off + b * stride] = tmp[b];
      }
    }
    stride *= q;
  }
  detail::digit_reverse_permute(v, q, S);
  const double measure = 1.0 / static_cast<double>(detail::ipow(q, g.resolution_level()));
  for (auto& x : v) x *= measure;
  return StepFunction(fp, M2, N2, std::move(v));
}

inline StepFunction ft(const StepFunction& f, FtDirection dir = FtDirection::forward) {
  return ft_fast(f, dir);
}

/// <f, chi_n> on D for f supported in D (M = 0). Vanishes identically for
/// n >= q^N: the restricted character then has zero average on every cell.
inline Complex fourier_coefficient_on_D(const StepFunction& f, long long n) {
  if (f.support_level() != 0)
    throw FieldError("Fourier coefficients on D require support level M = 0");
  if (n < 0) throw FieldError("character index must be nonnegative");
  const auto& fp = f.params();
  const int q = fp->q();
  const int N = f.resolution_level();
  if (n >= detail::ipow(q, N)) return {0.0, 0.0};
  const auto g = f.materialized();
  detail::FtPlan plan(fp, N);
  std::vector<Complex> terms(g.cell_count());
  for (long long m = 0; m < g.cell_count(); ++m)
    terms[m] = g.raw_values()[m] * plan.root_conj[plan.chi_index_of_pair(n, m)];
  const double measure = 1.0 / static_cast<double>(detail::ipow(q, N));
  return detail::radix_sum(terms.data(), terms.size(), q) * measure;
}

}  // namespace lff
