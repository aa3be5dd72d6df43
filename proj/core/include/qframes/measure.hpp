#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qframes/errors.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Finite atom set with strictly positive weights mu_i.
class DiscreteMeasureSpace {
 public:
  explicit DiscreteMeasureSpace(std::vector<double> weights)
      : weights_(std::move(weights)) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
        throw PreconditionError("measure weight " + std::to_string(i) +
                                " must be positive and finite");
      }
    }
  }

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  const std::vector<double>& weights() const { return weights_; }

  double total_mass() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
  }

  friend bool operator==(const DiscreteMeasureSpace&,
                         const DiscreteMeasureSpace&) = default;

 private:
  std::vector<double> weights_;
};

/// Element of the weighted sequence space over the atoms.
struct L2Vector {
  DiscreteMeasureSpace space;
  QVector values;  // one quaternion per atom

  L2Vector(DiscreteMeasureSpace s, QVector v)
      : space(std::move(s)), values(std::move(v)) {
    if (values.dim() != space.size()) {
      throw DimensionError("L2Vector: value count must match atom count");
    }
  }
};

/// Weighted inner product, conjugate-linear in the first slot.
inline Quaternion l2_inner(const L2Vector& g, const L2Vector& h) {
  if (!(g.space == h.space)) {
    throw DimensionError("l2_inner: vectors live over different measures");
  }
  Quaternion acc = Quaternion::zero();
  for (int i = 0; i < g.space.size(); ++i) {
    acc = acc + conj(g.values[i]) * h.values[i] * g.space.weight(i);
  }
  return acc;
}

inline double l2_norm_sq(const L2Vector& g) { return l2_inner(g, g).a0; }

inline double l2_norm(const L2Vector& g) { return std::sqrt(l2_norm_sq(g)); }

/// Whitening isometry onto the unweighted coordinate space,
/// component i scaled by sqrt(mu_i).
inline QVector whiten(const L2Vector& g) {
  QVector out(g.space.size());
  for (int i = 0; i < g.space.size(); ++i) {
    out[i] = g.values[i] * std::sqrt(g.space.weight(i));
  }
  return out;
}

inline L2Vector unwhiten(const DiscreteMeasureSpace& space, const QVector& v) {
  if (v.dim() != space.size()) {
    throw DimensionError("unwhiten: component count must match atom count");
  }
  QVector out(space.size());
  for (int i = 0; i < space.size(); ++i) {
    out[i] = v[i] * (1.0 / std::sqrt(space.weight(i)));
  }
  return L2Vector(space, out);
}

}  // namespace qframes
