#pragma once

// Affine, quasi-affine, and co-affine systems built from a finite generator
// set. Elements:
//   affine        psi_{j,k} = delta_j tau_{u(k)} psi
//   quasi-affine  = affine for j >= 0; q^{j/2} tau_{u(k)} delta_j psi for j < 0
//   co-affine     c_{l,j} tau_{u(k)} delta_j psi at every scale
// Generators must integrate to zero; that is what makes every coefficient
// sum downstream a finite exact sum.

#include <map>
#include <string>

#include "lff/step_function.hpp"

namespace lff {

enum class SystemKind { affine, quasiAffine, coAffine };

inline const char* to_string(SystemKind k) {
  switch (k) {
    case SystemKind::affine: return "affine";
    case SystemKind::quasiAffine: return "quasiAffine";
    case SystemKind::coAffine: return "coAffine";
  }
  return "?";
}

/// Scalar weights c_{l,j} for co-affine systems: explicit per-(l, j) entries
/// over a default constant (disabled when has_default is false).
class WeightTable {
 public:
  WeightTable() : default_(1.0, 0.0), has_default_(true) {}
  explicit WeightTable(Complex constant) : default_(constant), has_default_(true) {}
  static WeightTable explicit_only() {
    WeightTable w;
    w.has_default_ = false;
    return w;
  }

  void set(int l, int j, Complex c) { entries_[{l, j}] = c; }
  Complex at(int l, int j) const {
    auto it = entries_.find({l, j});
    if (it != entries_.end()) return it->second;
    if (!has_default_)
      throw FieldError("co-affine weight undefined for (l=" + std::to_string(l) +
                       ", j=" + std::to_string(j) + ")");
    return default_;
  }

 private:
  std::map<std::pair<int, int>, Complex> entries_;
  Complex default_;
  bool has_default_;
};

struct SystemElementIndex {
  int l;        // generator, 1-based
  int j;        // scale
  long long k;  // translation
};

class AffineSystemSpec {
 public:
  AffineSystemSpec(std::vector<StepFunction> generators, SystemKind kind,
                   WeightTable weights = WeightTable())
      : generators_(std::move(generators)), kind_(kind), weights_(std::move(weights)) {
    if (generators_.empty()) throw FieldError("generator set is empty");
    for (std::size_t l = 1; l < generators_.size(); ++l)
      require_same_field(generators_[0].params(), generators_[l].params());
    for (std::size_t l = 0; l < generators_.size(); ++l) {
      if (std::abs(integral(generators_[l])) > 1e-12)
        throw FieldError(
            "generator " + std::to_string(l + 1) +
            " is not mean-zero; this library restricts generator sets to mean-zero "
            "functions so that all coefficient sums truncate exactly");
    }
  }

  const std::vector<StepFunction>& generators() const { return generators_; }
  const StepFunction& generator(int l) const { return generators_.at(l - 1); }
  int count() const { return static_cast<int>(generators_.size()); }
  SystemKind kind() const { return kind_; }
  const WeightTable& weights() const { return weights_; }
  const FieldParamsPtr& params() const { return generators_[0].params(); }

 private:
  std::vector<StepFunction> generators_;
  SystemKind kind_;
  WeightTable weights_;
};

/// The element eta_{l,j,k} of the system as an explicit StepFunction.
inline StepFunction system_element(const AffineSystemSpec& spec, const SystemElementIndex& idx) {
  const StepFunction& gen = spec.generator(idx.l);
  const auto& fp = gen.params();
  const FieldElement shift = translation_rep(fp, idx.k);
  switch (spec.kind()) {
    case SystemKind::affine:
      return dilate(translate(gen, shift), idx.j);
    case SystemKind::quasiAffine:
      if (idx.j >= 0) return dilate(translate(gen, shift), idx.j);
      return translate(dilate(gen, idx.j), shift) * Complex{half_power(fp->q(), idx.j), 0.0};
    case SystemKind::coAffine:
      return translate(dilate(gen, idx.j), shift) * spec.weights().at(idx.l, idx.j);
  }
  throw FieldError("unknown system kind");
}

}  // namespace lff
