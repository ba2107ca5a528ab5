#pragma once

// Deterministic test vectors. Values are drawn from splitmix64 on an
// integer lattice and balanced to an exactly-zero sum in integer
// arithmetic, so any regrouping of a full-support sum cancels bit-exactly.
// The final normalization multiplies by a power of two, which preserves
// that property while placing the norm in [1, 2).

#include <cstdint>

#include "lff/step_function.hpp"

namespace lff {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Integer uniform on [lo, hi] via rejection-free modulo (bias immaterial
  /// for test vectors).
  long long next_in(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Random mean-zero StepFunction on the (M, N) grid with norm in [1, 2).
inline StepFunction random_mean_zero(const FieldParamsPtr& fp, int M, int N,
                                     std::uint64_t seed) {
  SplitMix64 rng(seed);
  const long long D = detail::ipow(fp->q(), M + N);
  constexpr long long kAmp = 1LL << 26;
  std::vector<long long> re(D), im(D);
  long long sr = 0, si = 0;
  for (long long n = 0; n < D; ++n) {
    re[n] = rng.next_in(-kAmp, kAmp);
    im[n] = rng.next_in(-kAmp, kAmp);
    sr += re[n];
    si += im[n];
  }
  // exact integer mean removal: subtract the floor-mean everywhere and
  // spread the remainder over the first cells
  auto spread = [D](std::vector<long long>& v, long long s) {
    long long m = s / D, r = s % D;
    if (r < 0) {
      m -= 1;
      r += D;
    }
    for (long long n = 0; n < D; ++n) v[n] -= m;
    for (long long n = 0; n < r; ++n) v[n] -= 1;
  };
  spread(re, sr);
  spread(im, si);

  std::vector<Complex> vals(D);
  for (long long n = 0; n < D; ++n)
    vals[n] = Complex(static_cast<double>(re[n]), static_cast<double>(im[n]));
  StepFunction f(fp, M, N, std::move(vals));
  const double nrm = norm(f);
  if (nrm == 0.0) return f;
  const double scale = std::exp2(-std::floor(std::log2(nrm)));
  return f * Complex{scale, 0.0};
}

}  // namespace lff
