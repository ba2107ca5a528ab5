#pragma once

// Named verification suites. Each returns a list of (name, pass, detail)
// rows; the CLI `check` subcommand and the acceptance runner drive them.

#include <set>
#include <sstream>
#include <tuple>

#include "lff/fourier.hpp"
#include "lff/frames.hpp"
#include "lff/wavelets.hpp"

namespace lff {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

inline void row(CheckList& out, const std::string& name, bool pass,
                const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

}  // namespace detail

/// Mean-zero generator with cell values (1, 0.8, -0.8, -1)/norm on the
/// quarters of D; generates a non-tight frame for q = 2.
inline StepFunction perturbed_generator_q2(const FieldParamsPtr& fp) {
  std::vector<Complex> v = {{1.0, 0.0}, {0.8, 0.0}, {-0.8, 0.0}, {-1.0, 0.0}};
  StepFunction f(fp, 0, 2, std::move(v));
  return f * Complex{1.0 / norm(f), 0.0};
}

/// Simple integer-valued mean-zero generator pair for q = 3.
inline std::vector<StepFunction> simple_generators_q3(const FieldParamsPtr& fp) {
  std::vector<StepFunction> out;
  out.emplace_back(fp, 0, 1, std::vector<Complex>{{2, 0}, {-1, 0}, {-1, 0}});
  out.emplace_back(fp, 0, 1, std::vector<Complex>{{0, 0}, {1, 0}, {-1, 0}});
  return out;
}

// ---------------------------------------------------------------------------
// suite: un-props (translation lattice and the digit identity)
// ---------------------------------------------------------------------------
inline CheckList check_translation_lattice(const FieldParamsPtr& fp, long long limit) {
  CheckList out;
  const int q = fp->q();

  bool zero_iff = translation_rep(fp, 0).is_zero();
  bool abs_ok = true, rt_ok = true;
  for (long long n = 1; n < limit; ++n) {
    const FieldElement u = translation_rep(fp, n);
    if (u.is_zero()) zero_iff = false;
    long long lo = 1;
    int k = 1;
    while (lo * q <= n) {
      lo *= q;
      ++k;
    }
    if (u.abs_exponent() != k) abs_ok = false;  // |u(n)| = q^k iff q^{k-1} <= n < q^k
    if (translation_index(u) != n) rt_ok = false;
  }
  detail::row(out, "u(n) = 0 iff n = 0", zero_iff);
  detail::row(out, "|u(n)| = q^k iff q^(k-1) <= n < q^k, n < " + std::to_string(limit), abs_ok);
  detail::row(out, "index round-trip u <-> n", rt_ok);

  // closure under negation: exhaustive bijection on [0, limit)
  {
    bool ok = true;
    std::vector<char> seen(limit, 0);
    for (long long n = 0; n < limit && ok; ++n) {
      const FieldElement nu = -translation_rep(fp, n);
      const long long m = translation_index(nu);
      ok = m >= 0 && m < limit && !seen[m] && translation_rep(fp, m) == nu;
      if (m >= 0 && m < limit) seen[m] = 1;
    }
    detail::row(out, "negation closure is an index permutation", ok);
  }

  // closure under shift: exhaustive digitwise bijection for every l < limit,
  // cross-checked against field arithmetic on a subsample
  {
    const auto& tbl = detail::digit_tables(fp);
    int digits = 0;
    long long t = limit;
    while (t > 1) {
      t /= q;
      ++digits;
    }
    bool ok = true;
    std::vector<long long> image(limit);
    std::vector<char> seen(limit);
    for (long long l = 0; l < limit && ok; ++l) {
      std::fill(seen.begin(), seen.end(), 0);
      for (long long n = 0; n < limit; ++n) {
        long long m = 0, pw = 1, a = l, b = n;
        for (int i = 0; i < digits; ++i) {
          m += pw * tbl.add[(a % q) * q + (b % q)];
          a /= q;
          b /= q;
          pw *= q;
        }
        image[n] = m;
        if (m >= limit || seen[m]) {
          ok = false;
          break;
        }
        seen[m] = 1;
      }
    }
    detail::row(out, "shift closure u(l)+u(n): index permutation for all l,n < " +
                         std::to_string(limit),
                ok);
    bool cross = true;
    for (long long l = 0; l < std::min<long long>(limit, q * q) && cross; ++l)
      for (long long n = 0; n < std::min<long long>(limit, 4 * q * q); ++n) {
        const FieldElement s = translation_rep(fp, l) + translation_rep(fp, n);
        if (!(translation_rep(fp, translation_index(s)) == s)) {
          cross = false;
          break;
        }
      }
    detail::row(out, "shift closure matches field arithmetic on subsample", cross);
  }

  // u(r q^k + s) = u(r) t^{-k} + u(s)
  {
    bool ok = true;
    const long long rmax = detail::ipow(q, 4);
    for (long long r = 0; r < rmax && ok; ++r)
      for (int k = 0; k <= 3 && ok; ++k) {
        const long long qk = detail::ipow(q, k);
        for (long long s = 0; s < qk && ok; ++s) {
          const FieldElement lhs = translation_rep(fp, r * qk + s);
          const FieldElement rhs =
              translation_rep(fp, r) * FieldElement::monomial(fp, -k) + translation_rep(fp, s);
          ok = lhs == rhs;
        }
      }
    detail::row(out, "u(r q^k + s) = u(r) t^(-k) + u(s), r < q^4, k <= 3", ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// suite: characters
// ---------------------------------------------------------------------------
inline CheckList check_characters(const FieldParamsPtr& fp, int N_max = 3) {
  CheckList out;
  const int q = fp->q(), p = fp->p();
  double worst = 0.0;
  for (int N = 1; N <= N_max; ++N) {
    const long long D = detail::ipow(q, N);
    detail::FtPlan plan(fp, N);
    for (long long m = 0; m < D; ++m)
      for (long long n = 0; n < D; ++n) {
        std::vector<Complex> terms(D);
        for (long long x = 0; x < D; ++x) {
          const int a = plan.chi_index_of_pair(m, x);
          const int b = plan.chi_index_of_pair(n, x);
          terms[x] = plan.root[((a - b) % p + p) % p];
        }
        const Complex g =
            detail::radix_sum(terms.data(), D, q) / static_cast<double>(D);
        worst = std::max(worst, std::abs(g - (m == n ? Complex{1, 0} : Complex{0, 0})));
      }
  }
  detail::row(out, "character Gram = identity on D (N <= " + std::to_string(N_max) + ")",
              worst <= 1e-12, "max deviation " + detail::fmt(worst));

  SplitMix64 rng(0x1fULL * q + 7);
  bool homo = true;
  for (int it = 0; it < 10000 && homo; ++it) {
    FieldElement x(fp), y(fp);
    for (int e = -5; e <= 4; ++e) {
      x.set(e, GFElement::from_index(fp, static_cast<int>(rng.next() % q)));
      y.set(e, GFElement::from_index(fp, static_cast<int>(rng.next() % q)));
    }
    const int lhs = character_index(x + y);
    const int rhs = (character_index(x) + character_index(y)) % p;
    homo = lhs == rhs;
  }
  detail::row(out, "chi(x+y) = chi(x) chi(y), 10^4 random pairs, exact index arithmetic",
              homo);
  detail::row(out, "chi trivial on D, nontrivial on P^-1",
              character_index(FieldElement::monomial(fp, 0)) == 0 &&
                  character_index(FieldElement::monomial(fp, -1)) == 1);
  return out;
}

// ---------------------------------------------------------------------------
// suite: fourier
// ---------------------------------------------------------------------------
inline CheckList check_fourier(const FieldParamsPtr& fp) {
  CheckList out;
  const int q = fp->q();
  double unit = 0.0, round = 0.0, agree = 0.0, parseval = 0.0;
  bool vanish = true;
  for (int M = 0; M <= 2; ++M)
    for (int N = 1; N <= 2; ++N) {
      for (int it = 0; it < 100; ++it) {
        const std::uint64_t seed = 900 + 17 * (M * 3 + N) + it;
        SplitMix64 rng(seed);
        const long long D = detail::ipow(q, M + N);
        std::vector<Complex> v(D);
        for (auto& z : v)
          z = {static_cast<double>(static_cast<long long>(rng.next() % 2001) - 1000) / 1000.0,
               static_cast<double>(static_cast<long long>(rng.next() % 2001) - 1000) / 1000.0};
        const StepFunction f(fp, M, N, std::move(v));
        const StepFunction fhat = ft_fast(f, FtDirection::forward);
        const StepFunction fref = ft_reference(f, FtDirection::forward);
        agree = std::max(agree, max_difference(fhat, fref));
        unit = std::max(unit, std::abs(norm(fhat) - norm(f)) / norm(f));
        round = std::max(round,
                         max_difference(ft_fast(fhat, FtDirection::inverse), f) /
                             std::max(1.0, norm(f)));
        if (M == 0) {
          double sum = 0.0;
          for (long long n = 0; n < D; ++n) sum += std::norm(fourier_coefficient_on_D(f, n));
          parseval = std::max(parseval, std::abs(sum - norm(f) * norm(f)));
          if (fourier_coefficient_on_D(f, D) != Complex{0.0, 0.0} ||
              fourier_coefficient_on_D(f, 3 * D + 1) != Complex{0.0, 0.0})
            vanish = false;
        }
      }
    }
  detail::row(out, "unitarity |f^| = |f| (100 random f per window)", unit <= 1e-12,
              "max rel " + detail::fmt(unit));
  detail::row(out, "round trip inverse(forward(f)) = f", round <= 1e-12,
              "max " + detail::fmt(round));
  detail::row(out, "fast transform agrees with reference", agree <= 1e-12,
              "max " + detail::fmt(agree));
  detail::row(out, "Parseval on D", parseval <= 1e-12, "max " + detail::fmt(parseval));
  detail::row(out, "coefficients vanish identically for n >= q^N", vanish);

  // covariance identities
  double dil = 0.0, mod = 0.0;
  {
    SplitMix64 rng(4242);
    std::vector<Complex> v(detail::ipow(q, 3));
    for (auto& z : v)
      z = {static_cast<double>(static_cast<long long>(rng.next() % 2001) - 1000) / 1000.0,
           static_cast<double>(static_cast<long long>(rng.next() % 2001) - 1000) / 1000.0};
    const StepFunction f(fp, 1, 2, std::move(v));
    const StepFunction fhat = ft(f);
    for (int j = -2; j <= 2; ++j)
      dil = std::max(dil, max_difference(ft(dilate(f, j)), dilate(fhat, -j)));
    for (long long ky = 1; ky <= 2; ++ky) {
      const FieldElement y = translation_rep(fp, ky);
      const StepFunction lhs = ft(translate(f, y));
      // the modulation factor is constant only on cells of P^{|y| exponent}
      const int res = std::max(fhat.resolution_level(), y.abs_exponent());
      const StepFunction base = fhat.embedded(fhat.support_level(), res).materialized();
      std::vector<Complex> w = base.values();
      for (long long m = 0; m < base.cell_count(); ++m) {
        const FieldElement xi = cell_rep(fp, base.support_level(), res, m);
        w[m] *= std::conj(character_value(xi * y));
      }
      mod = std::max(mod,
                     max_difference(lhs, StepFunction(fp, base.support_level(), res, w)));
    }
  }
  detail::row(out, "dilation covariance (delta_j f)^ = delta_-j f^", dil <= 1e-12,
              "max " + detail::fmt(dil));
  detail::row(out, "translation modulation (tau_y f)^ = conj(chi_.(y)) f^", mod <= 1e-12,
              "max " + detail::fmt(mod));
  return out;
}

// ---------------------------------------------------------------------------
// commutation of dilation and translation
// ---------------------------------------------------------------------------
inline CheckList check_commutation(const FieldParamsPtr& fp) {
  CheckList out;
  const int q = fp->q();
  bool ok = true;
  const StepFunction f = random_mean_zero(fp, 1, 2, 2024);
  for (int j = -2; j <= -1 && ok; ++j)
    for (long long k = 0; k < 16 && ok; ++k) {
      const StepFunction lhs = dilate(translate(f, translation_rep(fp, k)), j);
      const long long k2 = k * detail::ipow(q, -j);
      const StepFunction rhs = translate(dilate(f, j), translation_rep(fp, k2));
      ok = bitwise_equal(lhs, rhs);
    }
  detail::row(out, "delta_j tau_u(k) = tau_u(q^-j k) delta_j exactly, j in {-1,-2}, k < 16",
              ok);
  return out;
}

// ---------------------------------------------------------------------------
// suite: lemma32 (the averaging identity)
// ---------------------------------------------------------------------------
inline CheckList check_lemma32(const FieldParamsPtr& fp,
                               const std::vector<StepFunction>& gens,
                               const std::string& label, int pairs, std::uint64_t seed) {
  CheckList out;
  double worst = 0.0;
  for (int s = 0; s < pairs; ++s) {
    const StepFunction f = random_mean_zero(fp, 1, 2, seed + 2 * s);
    const StepFunction g = random_mean_zero(fp, 1, 2, seed + 2 * s + 1);
    for (int J = 1; J <= 2; ++J)
      for (int j = -J; j <= 2; ++j)
        worst = std::max(worst, quasi_identity_defect(gens, gens, f, g, J, j));
  }
  detail::row(out,
              "averaging identity " + label + ": J in {1,2}, j in [-J,2], " +
                  std::to_string(pairs) + " random pairs",
              worst <= 1e-9, "max defect " + detail::fmt(worst));
  return out;
}

// ---------------------------------------------------------------------------
// suite: lemma33 (decay of the negative-scale tails)
// ---------------------------------------------------------------------------
inline CheckList check_lemma33(const FieldParamsPtr& fp) {
  CheckList out;
  const auto H = haar_generators(fp);

  {
    const auto rows = lemma33_decay(H, H[0], 4);
    bool allzero = true;
    for (const auto& r : rows) allzero = allzero && r.tail_a == 0.0 && r.tail_b == 0.0;
    detail::row(out, "tails vanish exactly for f = haar generator, N = 1..4", allzero);
  }
  {
    const StepFunction f = random_mean_zero(fp, 3, 1, 777);
    const auto rows = lemma33_decay(H, f, 5);
    // cutoff: N >= M_f + N_psi - 1 = 3 for tail_a, N >= M_f + N_psi for tail_b
    bool mono = true, zero_beyond = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      mono = mono && rows[i].tail_a <= rows[i - 1].tail_a + 1e-15 &&
             rows[i].tail_b <= rows[i - 1].tail_b + 1e-15;
    for (const auto& r : rows)
      if (r.level >= 4) zero_beyond = zero_beyond && r.tail_a == 0.0 && r.tail_b == 0.0;
    detail::row(out, "random f (M=3): tails non-increasing", mono);
    detail::row(out, "random f (M=3): tails exactly 0 beyond the coarse cutoff", zero_beyond);
  }
  {
    const StepFunction f = random_mean_zero(fp, 1, 2, 778);
    const auto rows = lemma33_decay(H, f, 4);
    const bool ok = rows[3].tail_a < rows[0].tail_a ||
                    (rows[3].tail_a == 0.0 && rows[0].tail_a == 0.0);
    detail::row(out, "random f (M=1): tail(4) < tail(1) or both zero", ok);
  }
  return out;
}

// ---------------------------------------------------------------------------
// suite: duality
// ---------------------------------------------------------------------------
inline CheckList check_duality(const FieldParamsPtr& fp) {
  CheckList out;
  const auto H = haar_generators(fp);
  const StepFunction& psi = H[0];
  const std::vector<StepFunction> two = {psi * Complex{2.0, 0.0}};
  const std::vector<StepFunction> half = {psi * Complex{0.5, 0.0}};
  const std::vector<StepFunction> one = {psi};

  const double a1 = duality_defect(two, half, 6, SystemKind::affine, 5001);
  const double q1 = duality_defect(two, half, 6, SystemKind::quasiAffine, 5001);
  detail::row(out, "(2 psi, psi/2) is an affine and quasi-affine dual pair",
              a1 <= 1e-9 && q1 <= 1e-9,
              "defects " + detail::fmt(a1) + ", " + detail::fmt(q1));

  const double a2 = duality_defect(two, one, 6, SystemKind::affine, 5002);
  const double q2 = duality_defect(two, one, 6, SystemKind::quasiAffine, 5002);
  detail::row(out, "(2 psi, psi) fails duality by 1 in both variants",
              std::abs(a2 - 1.0) <= 1e-9 && std::abs(q2 - 1.0) <= 1e-9,
              "defects " + detail::fmt(a2) + ", " + detail::fmt(q2));

  const double a3 = duality_defect(one, one, 6, SystemKind::affine, 5003);
  const double q3 = duality_defect(one, one, 6, SystemKind::quasiAffine, 5003);
  detail::row(out, "(psi, psi) is self-dual in both variants", a3 <= 1e-9 && q3 <= 1e-9,
              "defects " + detail::fmt(a3) + ", " + detail::fmt(q3));
  return out;
}

// ---------------------------------------------------------------------------
// suite: invariance
// ---------------------------------------------------------------------------
inline CheckList check_invariance(const FieldParamsPtr& fp) {
  CheckList out;
  const auto H = haar_generators(fp);
  const FieldElement pu1 = FieldElement::monomial(fp, 1) * translation_rep(fp, 1);
  const std::vector<FieldElement> shifts = {
      pu1, translation_rep(fp, 1),
      FieldElement::monomial(fp, 2) * translation_rep(fp, 1)};

  const auto same = invariance_defect(H, H, 3, shifts, 6001);
  detail::row(out, "(haar, haar): K translation invariant and K = Ktilde",
              same.translation_defect <= 1e-9 && same.form_gap <= 1e-9,
              detail::fmt(same.translation_defect) + ", " + detail::fmt(same.form_gap));

  // tau_{t u(1)} maps each haar generator to a unit multiple of another one,
  // so this pair stays translation invariant; the characterization then
  // demands K = Ktilde as well, and both defects sit on the same side.
  std::vector<StepFunction> shifted;
  for (const auto& h : H) shifted.push_back(translate(h, pu1));
  const auto sh = invariance_defect(H, shifted, 3, shifts, 6002);
  const bool consistent = (sh.translation_defect <= 1e-9) == (sh.form_gap <= 1e-9);
  detail::row(out, "(haar, tau_{t u(1)} haar): defects on the same side of the dichotomy",
              consistent,
              detail::fmt(sh.translation_defect) + ", " + detail::fmt(sh.form_gap));

  // a genuinely non-invariant pair: haar against its own coarse dilates
  std::vector<StepFunction> dilated;
  for (const auto& h : H) dilated.push_back(dilate(h, 1));
  const auto di = invariance_defect(H, dilated, 3, shifts, 6003);
  detail::row(out, "(haar, delta_1 haar): both defects exceed 0.01",
              di.translation_defect > 0.01 && di.form_gap > 0.01,
              detail::fmt(di.translation_defect) + ", " + detail::fmt(di.form_gap));
  return out;
}

// ---------------------------------------------------------------------------
// suite: haar-tight
// ---------------------------------------------------------------------------
inline CheckList check_haar_tight(const FieldParamsPtr& fp, bool include_23 = true) {
  CheckList out;
  const auto H = haar_generators(fp);
  std::vector<std::pair<int, int>> spaces = {{1, 2}};
  if (include_23) spaces.push_back({2, 3});
  for (const auto kind : {SystemKind::affine, SystemKind::quasiAffine}) {
    for (const auto& [M, N] : spaces) {
      const AffineSystemSpec spec(H, kind);
      const BoundsReport r = restricted_frame_bounds(spec, M, N);
      const double dev = std::max(std::abs(r.lambda_min - 1.0), std::abs(r.lambda_max - 1.0));
      detail::row(out,
                  std::string("haar ") + to_string(kind) + " bounds = 1 on V(" +
                      std::to_string(M) + "," + std::to_string(N) + ")",
                  dev <= 1e-9, "max deviation " + detail::fmt(dev));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// perturbed-generator bound bracketing
// ---------------------------------------------------------------------------
inline CheckList check_perturbed_bracketing(const FieldParamsPtr& fp) {
  CheckList out;
  const std::vector<StepFunction> P = {perturbed_generator_q2(fp)};
  BoundsReport a12 = restricted_frame_bounds(AffineSystemSpec(P, SystemKind::affine), 1, 2);
  BoundsReport q12 =
      restricted_frame_bounds(AffineSystemSpec(P, SystemKind::quasiAffine), 1, 2);
  BoundsReport a23 = restricted_frame_bounds(AffineSystemSpec(P, SystemKind::affine), 2, 3);
  BoundsReport q23 =
      restricted_frame_bounds(AffineSystemSpec(P, SystemKind::quasiAffine), 2, 3);

  const double gmin12 = std::abs(a12.lambda_min - q12.lambda_min);
  const double gmax12 = std::abs(a12.lambda_max - q12.lambda_max);
  const double gmin23 = std::abs(a23.lambda_min - q23.lambda_min);
  const double gmax23 = std::abs(a23.lambda_max - q23.lambda_max);
  detail::row(out, "perturbed generator: affine/quasi bound gaps < 0.05 on V(2,3)",
              gmin23 < 0.05 && gmax23 < 0.05,
              "gaps " + detail::fmt(gmin23) + ", " + detail::fmt(gmax23));
  detail::row(out, "gaps shrink from V(1,2) to V(2,3)", gmin23 < gmin12 && gmax23 < gmax12,
              "V(1,2) gaps " + detail::fmt(gmin12) + ", " + detail::fmt(gmax12));
  detail::row(out, "restricted bounds bracket: min non-increasing, max non-decreasing",
              a23.lambda_min <= a12.lambda_min + 1e-12 &&
                  a23.lambda_max >= a12.lambda_max - 1e-12,
              "affine [" + detail::fmt(a23.lambda_min) + "," + detail::fmt(a23.lambda_max) +
                  "] vs [" + detail::fmt(a12.lambda_min) + "," + detail::fmt(a12.lambda_max) +
                  "]");
  return out;
}

// ---------------------------------------------------------------------------
// the averaged co-affine energy identity and its decay
// ---------------------------------------------------------------------------
inline CheckList check_wf_identity(const FieldParamsPtr& fp, int samples,
                                   std::uint64_t seed) {
  CheckList out;
  const AffineSystemSpec spec(haar_generators(fp), SystemKind::coAffine);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const StepFunction f = random_mean_zero(fp, 1, 2, seed + s);
    const double a = wf_average(spec, f, WfSide::time);
    const double b = wf_average(spec, f, WfSide::fourier);
    worst = std::max(worst, std::abs(a - b));
  }
  detail::row(out,
              "D-averaged w_f: time and Fourier sides agree (" + std::to_string(samples) +
                  " random f)",
              worst <= 1e-9, "max gap " + detail::fmt(worst));
  return out;
}

inline CheckList check_coaffine_decay(const FieldParamsPtr& fp, int m_max = 4) {
  CheckList out;
  const AffineSystemSpec spec(haar_generators(fp), SystemKind::coAffine);
  const auto rows = coaffine_decay_table(spec, m_max);
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : rows) {
    ok = ok && std::abs(r.avg_time - r.predicted) <= 1e-9 &&
         std::abs(r.avg_fourier - r.predicted) <= 1e-9;
    os << " m=" << r.m << ":" << detail::fmt(r.avg_time);
  }
  detail::row(out, "shell averages follow q^(1-m): no positive lower co-affine bound", ok,
              os.str());
  bool mono = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = rows[i].avg_time / rows[i - 1].avg_time;
    mono = mono && std::abs(ratio - 1.0 / fp->q()) <= 1e-9;
  }
  detail::row(out, "successive shell averages decay by exactly 1/q", mono);
  return out;
}

// ---------------------------------------------------------------------------
// exact truncation of the effective index ranges
// ---------------------------------------------------------------------------
inline CheckList check_exact_truncation(const FieldParamsPtr& fp2, const FieldParamsPtr& fp3) {
  CheckList out;
  struct Config {
    FieldParamsPtr fp;
    std::vector<StepFunction> gens;
    SystemKind kind;
    int M, N;
    std::uint64_t seed;
  };
  std::vector<Config> configs;
  const auto H2 = haar_generators(fp2);
  const auto H3 = haar_generators(fp3);
  const std::vector<StepFunction> P2 = {perturbed_generator_q2(fp2)};
  const auto P3 = simple_generators_q3(fp3);
  for (std::uint64_t s : {11u, 12u}) {
    configs.push_back({fp2, H2, SystemKind::affine, 1, 2, 9100 + s});
    configs.push_back({fp2, H2, SystemKind::quasiAffine, 1, 2, 9200 + s});
    configs.push_back({fp2, P2, SystemKind::affine, 2, 2, 9300 + s});
    configs.push_back({fp2, P2, SystemKind::coAffine, 1, 2, 9400 + s});
    configs.push_back({fp2, H2, SystemKind::coAffine, 1, 2, 9500 + s});
    configs.push_back({fp3, H3, SystemKind::affine, 1, 2, 9600 + s});
    configs.push_back({fp3, H3, SystemKind::quasiAffine, 1, 1, 9700 + s});
    configs.push_back({fp3, P3, SystemKind::affine, 1, 1, 9800 + s});
    configs.push_back({fp3, P3, SystemKind::quasiAffine, 1, 2, 9900 + s});
    configs.push_back({fp3, H3, SystemKind::coAffine, 1, 1, 10000 + s});
  }

  bool all_zero = true, forms_equal = true;
  long long extras = 0;
  for (const auto& cfg : configs) {
    const AffineSystemSpec spec(cfg.gens, cfg.kind);
    const StepFunction f = random_mean_zero(cfg.fp, cfg.M, cfg.N, cfg.seed);
    std::set<std::tuple<int, int, long long>> base;
    for (const auto& idx : effective_index_set(spec, cfg.M, cfg.N))
      base.insert({idx.l, idx.j, idx.k});
    for (const auto& idx : effective_index_set(spec, cfg.M, cfg.N, 2)) {
      if (base.count({idx.l, idx.j, idx.k})) continue;
      ++extras;
      const Complex c = inner_product(f, system_element(spec, idx));
      if (c != Complex{0.0, 0.0}) all_zero = false;
    }
    if (cfg.kind != SystemKind::coAffine) {
      const FormKind fk = cfg.kind == SystemKind::affine ? FormKind::K : FormKind::Ktilde;
      const Complex base_form = form_value(fk, cfg.gens, cfg.gens, f, f);
      const Complex padded_form = form_value(fk, cfg.gens, cfg.gens, f, f, std::nullopt, 2);
      if (base_form != padded_form) forms_equal = false;
    }
  }
  detail::row(out, "all padded coefficients are exact floating-point zeros (20 configs)",
              all_zero, std::to_string(extras) + " padded coefficients checked");
  detail::row(out, "form values are bit-identical under padding", forms_equal);
  return out;
}

// ---------------------------------------------------------------------------
// eigensolver known-spectrum cases
// ---------------------------------------------------------------------------
inline CheckList check_eigensolver() {
  CheckList out;
  {
    Matrix I3(3);
    for (int i = 0; i < 3; ++i) I3(i, i) = {1.0, 0.0};
    const auto ev = hermitian_spectrum(I3);
    detail::row(out, "identity: spectrum (1,1,1)",
                std::abs(ev[0] - 1) <= 1e-12 && std::abs(ev[2] - 1) <= 1e-12);
  }
  {
    // conjugate diag(2,5,7) by the reflector of a fixed complex vector
    std::vector<Complex> u = {{1.0, 2.0}, {-3.0, 0.0}, {2.0, -1.0}};
    double un = 0.0;
    for (auto& z : u) un += std::norm(z);
    for (auto& z : u) z /= std::sqrt(un);
    Matrix U(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        U(i, j) = (i == j ? Complex{1, 0} : Complex{0, 0}) - 2.0 * u[i] * std::conj(u[j]);
    const double d[3] = {2, 5, 7};
    Matrix H(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex s{0, 0};
        for (int k = 0; k < 3; ++k) s += U(i, k) * d[k] * std::conj(U(j, k));
        H(i, j) = s;
      }
    const auto ev = hermitian_spectrum(H);
    const double dev = std::max({std::abs(ev[0] - 2), std::abs(ev[1] - 5), std::abs(ev[2] - 7)});
    detail::row(out, "conjugated diag(2,5,7) recovered", dev <= 1e-12,
                "max deviation " + detail::fmt(dev));
    const auto ev2 = hermitian_spectrum(H);
    detail::row(out, "determinism: repeated runs bit-identical", ev == ev2);
  }
  {
    Matrix H(2);
    H(0, 0) = {2, 0};
    H(0, 1) = {1, 0};
    H(1, 0) = {1, 0};
    H(1, 1) = {2, 0};
    const auto ev = hermitian_spectrum(H);
    detail::row(out, "[[2,1],[1,2]] -> (1,3)",
                std::abs(ev[0] - 1) <= 1e-12 && std::abs(ev[1] - 3) <= 1e-12);
  }
  {
    Matrix H(2);
    H(0, 1) = {1, 0};
    bool threw = false;
    try {
      hermitian_spectrum(H);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    detail::row(out, "non-Hermitian input rejected", threw);
  }
  return out;
}

// ---------------------------------------------------------------------------
// modulus independence of the restricted bounds
// ---------------------------------------------------------------------------
inline CheckList check_modulus_independence() {
  CheckList out;
  // GF(4) admits a single monic irreducible quadratic over GF(2), so the
  // comparison runs at q = 8, the smallest size with two distinct moduli.
  const auto fa = make_field(2, 3, {1, 1, 0, 1});
  const auto fb = make_field(2, 3, {1, 0, 1, 1});
  const BoundsReport ra =
      restricted_frame_bounds(AffineSystemSpec(haar_generators(fa), SystemKind::affine), 1, 2);
  const BoundsReport rb =
      restricted_frame_bounds(AffineSystemSpec(haar_generators(fb), SystemKind::affine), 1, 2);
  const double dmin = std::abs(ra.lambda_min - rb.lambda_min);
  const double dmax = std::abs(ra.lambda_max - rb.lambda_max);
  detail::row(out, "q=8 haar bounds identical under X^3+X+1 and X^3+X^2+1",
              dmin <= 1e-9 && dmax <= 1e-9,
              "gaps " + detail::fmt(dmin) + ", " + detail::fmt(dmax));
  detail::row(out, "both moduli give the tight bound 1",
              std::abs(ra.lambda_min - 1) <= 1e-9 && std::abs(ra.lambda_max - 1) <= 1e-9 &&
                  std::abs(rb.lambda_min - 1) <= 1e-9 && std::abs(rb.lambda_max - 1) <= 1e-9);
  return out;
}

}  // namespace lff
