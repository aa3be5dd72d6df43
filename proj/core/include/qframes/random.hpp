#pragma once

#include <cmath>
#include <cstdint>

#include "qframes/qvector.hpp"

namespace qframes {

/// splitmix64 with a hand-rolled Box-Muller on top.  std::mt19937 plus
/// std::normal_distribution would do, but normal_distribution's output is
/// implementation-defined and we want bit-identical streams everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Decorrelated per-trial seed from a master seed and a trial index.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return SplitMix64(master + (index + 1) * 0x9e3779b97f4a7c15ull).next();
}

inline Quaternion random_quaternion(SplitMix64& rng) {
  return Quaternion(rng.gaussian(), rng.gaussian(), rng.gaussian(),
                    rng.gaussian());
}

inline QVector random_qvector(SplitMix64& rng, int dim) {
  QVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = random_quaternion(rng);
  return v;
}

inline QVector random_unit_qvector(SplitMix64& rng, int dim) {
  for (;;) {
    QVector v = random_qvector(rng, dim);
    if (v.norm_sq() > 1e-12) return v.normalized();
  }
}

}  // namespace qframes
