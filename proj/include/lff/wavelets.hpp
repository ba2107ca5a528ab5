#pragma once

// The generalized Haar family on D: q-1 generators with window (0, 1),
// generator l taking the value omega^{lk} on the cell t u(k), where omega
// is a primitive q-th root of unity. Each is unit-norm and mean-zero, and
// the affine system they generate is an orthonormal basis of L^2(K).

#include "lff/step_function.hpp"

namespace lff {

/// omega^a for omega = exp(2 pi i / q). Exact components at the quarter and
/// sixth points, and the half-turn and conjugation symmetries enforced
/// bit-exactly, so full-orbit sums cancel without rounding residue for
/// q in {2, 3, 4}.
inline std::vector<Complex> unity_root_table(int q) {
  std::vector<Complex> w(q);
  for (int a = 0; 4 * a <= q; ++a) w[a] = root_of_unity(a, q);
  if (q % 2 == 0)
    for (int a = q / 4 + 1; 2 * a <= q; ++a) w[a] = -std::conj(w[q / 2 - a]);
  else
    for (int a = q / 4 + 1; 2 * a <= q; ++a) w[a] = root_of_unity(a, q);
  for (int a = q / 2 + 1; a < q; ++a) w[a] = std::conj(w[q - a]);
  return w;
}

inline std::vector<StepFunction> haar_generators(const FieldParamsPtr& fp) {
  const int q = fp->q();
  const auto w = unity_root_table(q);
  std::vector<StepFunction> out;
  out.reserve(q - 1);
  for (int l = 1; l < q; ++l) {
    std::vector<Complex> v(q);
    for (int k = 0; k < q; ++k) v[k] = w[(l * k) % q];
    out.emplace_back(fp, 0, 1, std::move(v));
  }
  return out;
}

}  // namespace lff
