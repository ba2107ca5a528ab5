#pragma once

// The analytical core: effective (finite, exact) index sets for the affine,
// quasi-affine and co-affine systems over mean-zero step functions, the
// sesquilinear forms K and K-tilde, restricted frame bounds as extremal
// eigenvalues of the deflated frame operator, and the verification
// quantities for the averaging identity, translation invariance, duality,
// and the co-affine decay.
//
// Truncation: for mean-zero f with window (M_f, N_f) and mean-zero
// generator psi with window (M_psi, N_psi), scales j > N_f + M_psi put the
// element's support inside one constancy cell of f (coefficient is a
// multiple of the generator's integral, = 0), and scales j < -(M_f + N_psi)
// put supp f inside one constancy cell of the element (multiple of the
// integral of f). In between, the translation index is limited by support
// overlap. All sums below run over these finite ranges and are exact.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <thread>

#include "lff/fourier.hpp"
#include "lff/hermitian.hpp"
#include "lff/random.hpp"
#include "lff/systems.hpp"

namespace lff {

struct EffectiveRange {
  int l;  // generator, 1-based
  int j;
  long long k_count;
};

namespace detail {

inline long long k_count_for(SystemKind kind, int j, int M_psi, int M_f, int q) {
  // support of the element is a ball of radius q^{M_psi-j} centered at
  // t^j u(k) (dilate-last) or at u(k) (translate-last); it meets P^{-M_f}
  // iff |u(k)| stays below the larger radius.
  int m;
  if (kind == SystemKind::affine || (kind == SystemKind::quasiAffine && j >= 0))
    m = std::max(M_psi, M_f + j);
  else
    m = std::max(M_psi - j, M_f);
  return ipow(q, std::max(m, 0));
}

}  // namespace detail

/// Scale/translation ranges that can produce nonzero coefficients against
/// mean-zero test functions on the (M_f, N_f) grid. `pad` widens j by that
/// many levels on each side and k by a factor q^pad; the widened
/// entries contribute exactly zero (verified by the truncation checks).
inline std::vector<EffectiveRange> effective_ranges(const AffineSystemSpec& spec, int M_f,
                                                    int N_f, int pad = 0) {
  const int q = spec.params()->q();
  std::vector<EffectiveRange> out;
  for (int l = 1; l <= spec.count(); ++l) {
    const auto& gen = spec.generator(l);
    const int M_psi = gen.support_level(), N_psi = gen.resolution_level();
    const int j_lo = -(M_f + N_psi) - pad;
    const int j_hi = N_f + M_psi + pad;
    for (int j = j_lo; j <= j_hi; ++j) {
      long long kc = detail::k_count_for(spec.kind(), j, M_psi, M_f, q);
      if (pad) kc *= detail::ipow(q, pad);
      out.push_back({l, j, kc});
    }
  }
  return out;
}

inline std::vector<SystemElementIndex> effective_index_set(const AffineSystemSpec& spec,
                                                           int M_f, int N_f, int pad = 0) {
  std::vector<SystemElementIndex> out;
  for (const auto& r : effective_ranges(spec, M_f, N_f, pad))
    for (long long k = 0; k < r.k_count; ++k) out.push_back({r.l, r.j, k});
  return out;
}

namespace detail {

inline void require_mean_zero(const StepFunction& f, const char* who) {
  if (std::abs(integral(f)) > 1e-9 * (1.0 + norm(f)))
    throw FieldError(std::string(who) + " must be mean-zero");
}

}  // namespace detail

enum class FormKind { K, Ktilde, Kj, Ktilde_j };

/// The sesquilinear forms of the theory:
///   K(f,g)       = sum_{l,j,k} <f, psi_{l,j,k}> <phi_{l,j,k}, g>   (affine)
///   Ktilde       = same over the quasi-affine elements
///   Kj/Ktilde_j  = single-scale slices (require `j`)
/// Exact finite sums over the effective ranges; linear in f, conjugate-
/// linear in g; K(f,f) >= 0 when Phi = Psi.
inline Complex form_value(FormKind kind, const std::vector<StepFunction>& Psi,
                          const std::vector<StepFunction>& Phi, const StepFunction& f,
                          const StepFunction& g, std::optional<int> only_j = std::nullopt,
                          int pad = 0) {
  if (Psi.size() != Phi.size()) throw FieldError("generator sets must have equal cardinality");
  detail::require_mean_zero(f, "f");
  detail::require_mean_zero(g, "g");
  const bool level_only = kind == FormKind::Kj || kind == FormKind::Ktilde_j;
  if (level_only && !only_j) throw FieldError("level-restricted form requires j");
  const SystemKind sys = (kind == FormKind::K || kind == FormKind::Kj)
                             ? SystemKind::affine
                             : SystemKind::quasiAffine;
  const bool same = &Psi == &Phi;
  AffineSystemSpec specPsi(Psi, sys);
  AffineSystemSpec specPhi(same ? Psi : Phi, sys);

  const int M_f = std::max(f.support_level(), g.support_level());
  const int N_f = std::max(f.resolution_level(), g.resolution_level());
  Complex total{0.0, 0.0};
  for (int l = 1; l <= specPsi.count(); ++l) {
    const int M_psi = std::max(specPsi.generator(l).support_level(),
                               specPhi.generator(l).support_level());
    const int N_psi = std::max(specPsi.generator(l).resolution_level(),
                               specPhi.generator(l).resolution_level());
    const int j_lo = -(M_f + N_psi) - pad;
    const int j_hi = N_f + M_psi + pad;
    for (int j = j_lo; j <= j_hi; ++j) {
      if (only_j && j != *only_j) continue;
      long long kc = detail::k_count_for(sys, j, M_psi, M_f, specPsi.params()->q());
      if (pad) kc *= detail::ipow(specPsi.params()->q(), pad);
      for (long long k = 0; k < kc; ++k) {
        const StepFunction ep = system_element(specPsi, {l, j, k});
        const Complex a = inner_product(f, ep);
        const Complex b =
            same ? std::conj(inner_product(g, ep))
                 : std::conj(inner_product(g, system_element(specPhi, {l, j, k})));
        total += a * b;
      }
    }
  }
  return total;
}

/// |Ktilde_j(f,g) - q^{-J} sum_{nu=q^J}^{2q^J-1} K_j(tau_{u(nu)} f, tau_{u(nu)} g)|.
/// The averaging identity says this vanishes for every j >= -J.
inline double quasi_identity_defect(const std::vector<StepFunction>& Psi,
                                    const std::vector<StepFunction>& Phi,
                                    const StepFunction& f, const StepFunction& g, int J,
                                    int j) {
  if (J < 1) throw FieldError("J must be positive");
  if (j < -J) throw FieldError("the averaging identity requires j >= -J");
  const auto& fp = f.params();
  const long long qJ = detail::ipow(fp->q(), J);
  const Complex lhs = form_value(FormKind::Ktilde_j, Psi, Phi, f, g, j);
  Complex rhs{0.0, 0.0};
  for (long long nu = qJ; nu < 2 * qJ; ++nu) {
    const FieldElement y = translation_rep(fp, nu);
    rhs += form_value(FormKind::Kj, Psi, Phi, translate(f, y), translate(g, y), j);
  }
  rhs /= static_cast<double>(qJ);
  return std::abs(lhs - rhs);
}

struct BoundsReport {
  std::string system;
  int q = 0;
  int M = 0, N = 0;
  double lambda_min = 0.0, lambda_max = 0.0;
  std::vector<double> spectrum;  // ascending, constant direction removed
  long long index_count = 0;
  double elapsed_ms = 0.0;
};

namespace detail {

inline int env_thread_cap() {
  if (const char* s = std::getenv("LFF_THREADS")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// Coefficient row of one system element against the orthonormal indicator
// basis e_a = q^{N/2} 1_{cell a} of V(M, N): r[a] = <e_a, eta>.
// Returns the [lo, hi) range of nonzero entries.
inline std::pair<long long, long long> element_row(const StepFunction& eta, int M, int N,
                                                   std::vector<Complex>& r) {
  const int q = eta.params()->q();
  const long long D = ipow(q, M + N);
  r.assign(D, Complex{0.0, 0.0});
  const int Mc = std::max(M, eta.support_level());
  const int Nc = std::max(N, eta.resolution_level());
  const std::vector<Complex> ev = eta.embedded_raw(Mc, Nc);
  const long long per = ipow(q, Nc - N);
  const double w = half_power(q, N) / static_cast<double>(ipow(q, Nc));
  const Complex amp = std::conj(eta.amplitude()) * w;
  long long lo = D, hi = 0;
  for (long long a = 0; a < D; ++a) {
    const Complex s = radix_sum(ev.data() + a * per, per, q);
    if (s != Complex{0.0, 0.0}) {
      r[a] = amp * std::conj(s);
      lo = std::min(lo, a);
      hi = std::max(hi, a + 1);
    }
  }
  if (lo >= hi) return {0, 0};
  return {lo, hi};
}

}  // namespace detail

/// Restricted frame bounds: the spectrum of the frame form
/// sum_eta |<., eta>|^2 on the mean-zero subspace of V(M, N), computed as
/// the Hermitian Gram matrix in the indicator basis restricted to the
/// orthogonal complement of the constant direction. For any true frame
/// bounds A <= B of the system, lambda_min >= A and lambda_max <= B.
inline BoundsReport restricted_frame_bounds(const AffineSystemSpec& spec, int M, int N) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& fp = spec.params();
  const int q = fp->q();
  const long long D = detail::ipow(q, M + N);
  const auto index = effective_index_set(spec, M, N);

  Matrix S(static_cast<std::size_t>(D));
  const int threads = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(detail::env_thread_cap()), std::max<std::size_t>(1, index.size())));

  // workers materialize coefficient rows; accumulation stays in index order
  const std::size_t chunk = 64;
  std::vector<std::vector<Complex>> rows(chunk);
  std::vector<std::pair<long long, long long>> spans(chunk);
  for (std::size_t base = 0; base < index.size(); base += chunk) {
    const std::size_t count = std::min(chunk, index.size() - base);
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i)
        spans[i] = detail::element_row(system_element(spec, index[base + i]), M, N, rows[i]);
    };
    if (threads <= 1 || count < 8) {
      work(0, count);
    } else {
      std::vector<std::thread> pool;
      const std::size_t step = (count + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        const std::size_t b = t * step, e = std::min(count, b + step);
        if (b < e) pool.emplace_back(work, b, e);
      }
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto [lo, hi] = spans[i];
      const auto& r = rows[i];
      for (long long a = lo; a < hi; ++a) {
        if (r[a] == Complex{0.0, 0.0}) continue;
        const Complex ca = std::conj(r[a]);
        for (long long b = lo; b < hi; ++b) S(a, b) += ca * r[b];
      }
    }
  }

  // deflate the constant direction: reflector swapping e_0 with the
  // normalized constant vector; the trailing (D-1)-block is the restriction
  const double vd = 1.0 / std::sqrt(static_cast<double>(D));
  std::vector<double> u(D, vd);
  u[0] -= 1.0;
  double un = 0.0;
  for (double x : u) un += x * x;
  un = std::sqrt(un);
  if (un > 0) {
    for (double& x : u) x /= un;
    std::vector<Complex> w(D, Complex{0.0, 0.0});
    for (long long a = 0; a < D; ++a) {
      Complex s{0.0, 0.0};
      for (long long b = 0; b < D; ++b) s += S(a, b) * u[b];
      w[a] = s;
    }
    Complex kappa{0.0, 0.0};
    for (long long a = 0; a < D; ++a) kappa += u[a] * w[a];
    for (long long a = 0; a < D; ++a)
      for (long long b = 0; b < D; ++b)
        S(a, b) += -2.0 * u[a] * std::conj(w[b]) - 2.0 * w[a] * u[b] +
                   4.0 * kappa * u[a] * u[b];
  }
  Matrix H(static_cast<std::size_t>(D - 1));
  for (long long a = 1; a < D; ++a)
    for (long long b = 1; b < D; ++b) H(a - 1, b - 1) = S(a, b);
  // symmetrize away the reflector's rounding crumbs
  for (long long a = 0; a < D - 1; ++a)
    for (long long b = 0; b <= a; ++b) {
      const Complex m = 0.5 * (H(a, b) + std::conj(H(b, a)));
      H(a, b) = m;
      H(b, a) = std::conj(m);
    }

  BoundsReport rep;
  rep.system = to_string(spec.kind());
  rep.q = q;
  rep.M = M;
  rep.N = N;
  rep.index_count = static_cast<long long>(index.size());
  rep.spectrum = hermitian_spectrum(H);
  // the form is a Gram: flush eigenvalue rounding crumbs below zero
  const double floor_tol = 1e-12 * std::max(1.0, std::abs(rep.spectrum.back()));
  for (double& x : rep.spectrum)
    if (x < 0.0 && x > -floor_tol) x = 0.0;
  rep.lambda_min = rep.spectrum.front();
  rep.lambda_max = rep.spectrum.back();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

/// Both sides of the averaged co-affine energy identity: the D-average of
/// w_f(x) = sum |<tau_x f, eta>|^2 over the co-affine system equals
/// int sum_{l,j} |c_{l,j}|^2 q^{-j} |psihat_l(t^j xi)|^2 |fhat(xi)|^2 dxi.
enum class WfSide { time, fourier };

inline double wf_average(const AffineSystemSpec& spec, const StepFunction& f, WfSide side) {
  if (spec.kind() != SystemKind::coAffine)
    throw FieldError("wf_average is defined for co-affine systems");
  detail::require_mean_zero(f, "f");
  const auto& fp = spec.params();
  const int q = fp->q();
  const int M_f = f.support_level(), N_f = f.resolution_level();

  if (side == WfSide::time) {
    // w_f is constant on cells of P^{N'} once N' reaches the finest
    // resolution of any effective element
    int Nprime = 0;
    for (int l = 1; l <= spec.count(); ++l)
      Nprime = std::max(Nprime, spec.generator(l).resolution_level() + N_f +
                                    spec.generator(l).support_level());
    const StepFunction fref = f.embedded(M_f, std::max(N_f, Nprime));
    double total = 0.0;
    for (long long m = 0; m < detail::ipow(q, Nprime); ++m) {
      const FieldElement x = FieldElement::monomial(fp, Nprime) * translation_rep(fp, m);
      const StepFunction tf = translate(fref, x);
      double wsum = 0.0;
      for (int l = 1; l <= spec.count(); ++l) {
        const auto& gen = spec.generator(l);
        const int j_lo = -(M_f + gen.resolution_level());
        const int j_hi = N_f + gen.support_level();
        for (int j = j_lo; j <= j_hi; ++j) {
          const long long kc =
              detail::k_count_for(SystemKind::coAffine, j, gen.support_level(), M_f, q);
          for (long long k = 0; k < kc; ++k)
            wsum += std::norm(inner_product(tf, system_element(spec, {l, j, k})));
        }
      }
      total += wsum;
    }
    return total / static_cast<double>(detail::ipow(q, Nprime));
  }

  // Fourier side by exact cellwise quadrature
  const StepFunction fhat = ft(f);
  std::vector<StepFunction> phat;
  for (int l = 1; l <= spec.count(); ++l) phat.push_back(ft(spec.generator(l)));
  int Ng = M_f;
  for (int l = 1; l <= spec.count(); ++l)
    Ng = std::max(Ng, spec.generator(l).support_level() + M_f +
                          spec.generator(l).resolution_level());
  const int Mg = N_f;
  double total = 0.0;
  for (long long n = 0; n < detail::ipow(q, Mg + Ng); ++n) {
    const FieldElement xi = cell_rep(fp, Mg, Ng, n);
    const double fv = std::norm(value_at(fhat, xi));
    if (fv == 0.0) continue;
    double s = 0.0;
    for (int l = 1; l <= spec.count(); ++l) {
      const auto& gen = spec.generator(l);
      const int j_lo = -(M_f + gen.resolution_level());
      const int j_hi = N_f + gen.support_level();
      for (int j = j_lo; j <= j_hi; ++j) {
        const double pv =
            std::norm(value_at(phat[l - 1], FieldElement::monomial(fp, j) * xi));
        if (pv == 0.0) continue;
        const double w = std::norm(spec.weights().at(l, j));
        s += w * pv * half_power(q, -2 * j);  // q^{-j}
      }
    }
    total += s * fv / static_cast<double>(detail::ipow(q, Ng));
  }
  return total;
}

struct DecayRow {
  int m;
  double avg_time;
  double avg_fourier;
  double predicted;  // q^{1-m} for the Haar family with unit weights
};

/// Unit-norm f_m with fhat = normalized indicator of the shell |xi| = q^m.
inline StepFunction shell_test_function(const FieldParamsPtr& fp, int m) {
  const int q = fp->q();
  const long long D = detail::ipow(q, m);
  const long long first = detail::ipow(q, m - 1);
  std::vector<Complex> v(D, Complex{0.0, 0.0});
  const double amp = 1.0 / std::sqrt(static_cast<double>(D - first));
  for (long long n = first; n < D; ++n) v[n] = amp;
  const StepFunction fhat(fp, m, 0, std::move(v));
  return ft(fhat, FtDirection::inverse);
}

/// Witness table for the nonexistence of co-affine frames: any lower frame
/// bound is at most the D-average of w_{f_m}, which decays geometrically.
inline std::vector<DecayRow> coaffine_decay_table(const AffineSystemSpec& spec, int m_max) {
  std::vector<DecayRow> rows;
  const int q = spec.params()->q();
  for (int m = 1; m <= m_max; ++m) {
    const StepFunction f = shell_test_function(spec.params(), m);
    DecayRow r;
    r.m = m;
    r.avg_time = wf_average(spec, f, WfSide::time);
    r.avg_fourier = wf_average(spec, f, WfSide::fourier);
    r.predicted = half_power(q, 2 * (1 - m));
    rows.push_back(r);
  }
  return rows;
}

/// max over sampled mean-zero f of |K(f,f) - ||f||^2| / ||f||^2 for the
/// affine (K) or quasi-affine (Ktilde) form.
inline double duality_defect(const std::vector<StepFunction>& Psi,
                             const std::vector<StepFunction>& Phi, int sample_count,
                             SystemKind variant, std::uint64_t seed, int M = 1, int N = 2) {
  if (Psi.size() != Phi.size()) throw FieldError("generator sets must have equal cardinality");
  const FormKind kind = variant == SystemKind::affine ? FormKind::K : FormKind::Ktilde;
  double worst = 0.0;
  for (int s = 0; s < sample_count; ++s) {
    const StepFunction f = random_mean_zero(Psi[0].params(), M, N, seed + s);
    const double n2 = inner_product(f, f).real();
    const Complex K = form_value(kind, Psi, Phi, f, f);
    worst = std::max(worst, std::abs(K - n2) / n2);
  }
  return worst;
}

struct InvarianceDefect {
  double translation_defect;
  double form_gap;
};

/// Translation invariance of K versus the gap between K and Ktilde. The
/// characterization says either both vanish or neither does.
inline InvarianceDefect invariance_defect(const std::vector<StepFunction>& Psi,
                                          const std::vector<StepFunction>& Phi,
                                          int sample_count,
                                          const std::vector<FieldElement>& shifts,
                                          std::uint64_t seed, int M = 1, int N = 2) {
  if (Psi.size() != Phi.size()) throw FieldError("generator sets must have equal cardinality");
  const auto& fp = Psi[0].params();
  InvarianceDefect out{0.0, 0.0};
  int Nneed = N;
  for (const auto& y : shifts)
    if (!y.is_zero()) Nneed = std::max(Nneed, y.digits().rbegin()->first + 1);
  for (int s = 0; s < sample_count; ++s) {
    const StepFunction f = random_mean_zero(fp, M, N, seed + 2 * s);
    const StepFunction g = random_mean_zero(fp, M, N, seed + 2 * s + 1);
    const Complex K = form_value(FormKind::K, Psi, Phi, f, g);
    const Complex Kt = form_value(FormKind::Ktilde, Psi, Phi, f, g);
    out.form_gap = std::max(out.form_gap, std::abs(K - Kt));
    const StepFunction fr = f.embedded(M, Nneed);
    const StepFunction gr = g.embedded(M, Nneed);
    for (const auto& y : shifts) {
      const Complex Ky = form_value(FormKind::K, Psi, Phi, translate(fr, y), translate(gr, y));
      out.translation_defect = std::max(out.translation_defect, std::abs(Ky - K));
    }
  }
  return out;
}

struct DecayTail {
  int level;      // N
  double tail_a;  // sum_{j<0} Ktilde_j(delta_N f, delta_N f)
  double tail_b;  // q^{-N} sum_{j<-N} sum_{nu in D_N} K_j(tau_u(nu) f, ...)
};

/// The two vanishing tails behind the frame-bound transfer: exact finite
/// sums, identically zero once the dilation pushes every negative scale
/// past the coarse cutoff.
inline std::vector<DecayTail> lemma33_decay(const std::vector<StepFunction>& Psi,
                                            const StepFunction& f, int N_max) {
  detail::require_mean_zero(f, "f");
  const auto& fp = f.params();
  const int q = fp->q();
  std::vector<DecayTail> rows;
  for (int N = 1; N <= N_max; ++N) {
    DecayTail row{N, 0.0, 0.0};
    const StepFunction dNf = dilate(f, N);
    {
      AffineSystemSpec spec(Psi, SystemKind::quasiAffine);
      for (const auto& r :
           effective_ranges(spec, dNf.support_level(), dNf.resolution_level())) {
        if (r.j >= 0) continue;
        for (long long k = 0; k < r.k_count; ++k)
          row.tail_a += std::norm(inner_product(dNf, system_element(spec, {r.l, r.j, k})));
      }
    }
    {
      AffineSystemSpec spec(Psi, SystemKind::affine);
      const long long qN = detail::ipow(q, N);
      for (long long nu = qN; nu < 2 * qN; ++nu) {
        const StepFunction tf = translate(f, translation_rep(fp, nu));
        for (const auto& r :
             effective_ranges(spec, tf.support_level(), tf.resolution_level())) {
          if (r.j >= -N) continue;
          for (long long k = 0; k < r.k_count; ++k)
            row.tail_b += std::norm(inner_product(tf, system_element(spec, {r.l, r.j, k})));
        }
      }
      row.tail_b /= static_cast<double>(qN);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lff
