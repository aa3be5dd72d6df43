#include "qframes/generators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qframes/errors.hpp"
#include "qframes/spectral.hpp"

namespace qframes {

QMatrix random_matrix(SplitMix64& rng, int rows, int cols) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = random_quaternion(rng);
  }
  return m;
}

namespace {

std::vector<QVector> random_orthonormal(SplitMix64& rng, int dim, int count) {
  for (;;) {
    std::vector<QVector> raw;
    raw.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) raw.push_back(random_qvector(rng, dim));
    try {
      return gram_schmidt(raw);
    } catch (const PreconditionError&) {
      // measure-zero degeneracy; draw again
    }
  }
}

QMatrix with_spectrum(SplitMix64& rng, int rows, int cols, int rank) {
  std::vector<QVector> u = random_orthonormal(rng, rows, rank);
  std::vector<QVector> v = random_orthonormal(rng, cols, rank);
  QMatrix m(rows, cols);
  for (int t = 0; t < rank; ++t) {
    const double sigma = rng.uniform(0.5, 2.0);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        m(i, j) = m(i, j) + u[static_cast<std::size_t>(t)][i] * sigma *
                                conj(v[static_cast<std::size_t>(t)][j]);
      }
    }
  }
  return m;
}

}  // namespace

QMatrix well_conditioned_matrix(SplitMix64& rng, int rows, int cols) {
  return with_spectrum(rng, rows, cols, std::min(rows, cols));
}

QMatrix rank_deficient_matrix(SplitMix64& rng, int rows, int cols, int rank) {
  if (rank < 0 || rank > std::min(rows, cols)) {
    throw PreconditionError("rank_deficient_matrix: impossible rank");
  }
  return with_spectrum(rng, rows, cols, rank);
}

DiscreteMeasureSpace random_measure(SplitMix64& rng, int atoms) {
  std::vector<double> w(static_cast<std::size_t>(atoms));
  for (double& x : w) x = rng.uniform(0.2, 2.0);
  return DiscreteMeasureSpace(std::move(w));
}

FrameFamily random_bessel_family(SplitMix64& rng, int dim, int atoms) {
  DiscreteMeasureSpace space = random_measure(rng, atoms);
  std::vector<QVector> vectors;
  vectors.reserve(static_cast<std::size_t>(atoms));
  for (int i = 0; i < atoms; ++i) vectors.push_back(random_qvector(rng, dim));
  return FrameFamily(std::move(space), std::move(vectors), dim);
}

FrameFamily random_frame(SplitMix64& rng, int dim, int atoms) {
  if (atoms < dim) {
    throw PreconditionError("random_frame: need at least dim atoms");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    DiscreteMeasureSpace space = random_measure(rng, atoms);
    std::vector<QVector> vectors;
    vectors.reserve(static_cast<std::size_t>(atoms));
    for (int i = 0; i < atoms; ++i) {
      QVector f = QVector::basis(dim, i % dim);
      QVector noise = random_qvector(rng, dim);
      vectors.push_back(f + noise * 0.3);
    }
    FrameFamily fam(std::move(space), std::move(vectors), dim);
    if (frame_bounds(fam).lower >= 0.05) return fam;
  }
  throw PreconditionError("random_frame: could not reach the frame floor");
}

KFrameInstance kframe_positive(SplitMix64& rng, int dim, int atoms,
                               bool singular_k) {
  FrameFamily base = random_frame(rng, dim, atoms);
  QMatrix k = singular_k && dim > 1
                  ? rank_deficient_matrix(rng, dim, dim, dim - 1)
                  : well_conditioned_matrix(rng, dim, dim);
  return {map_family(k, base), k, true};
}

KFrameInstance kframe_negative(SplitMix64& rng, int dim) {
  if (dim < 2) throw PreconditionError("kframe_negative: need dim >= 2");
  const int atoms = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(dim - 1));
  FrameFamily fam = random_bessel_family(rng, dim, atoms);
  return {std::move(fam), well_conditioned_matrix(rng, dim, dim), false};
}

DouglasInstance douglas_instance(SplitMix64& rng, int rows, int cols_l,
                                 bool feasible, bool singular_m) {
  if (feasible) {
    QMatrix m = singular_m && rows > 1
                    ? rank_deficient_matrix(rng, rows, rows, rows - 1)
                    : well_conditioned_matrix(rng, rows, rows);
    QMatrix x0 = well_conditioned_matrix(rng, rows, cols_l);
    return {m * x0, std::move(m), true};
  }
  if (rows < 2) throw PreconditionError("douglas_instance: need rows >= 2");
  QMatrix m = rank_deficient_matrix(rng, rows, rows, rows - 1);
  QMatrix proj = m * pinv(m);
  QVector escape(rows);
  for (;;) {
    QVector raw = random_qvector(rng, rows);
    escape = raw - proj * raw;
    if (escape.norm_sq() > 1e-6) break;
  }
  escape = escape.normalized();
  QMatrix l = well_conditioned_matrix(rng, rows, cols_l);
  for (int i = 0; i < rows; ++i) l(i, 0) = escape[i];
  return {std::move(l), std::move(m), false};
}

SuperInstance disjoint_support_super(SplitMix64& rng, int n1, int n2, int m1,
                                     int m2) {
  FrameFamily a = m1 >= n1 ? random_frame(rng, n1, m1)
                           : random_bessel_family(rng, n1, m1);
  FrameFamily b = m2 >= n2 ? random_frame(rng, n2, m2)
                           : random_bessel_family(rng, n2, m2);
  SuperFrame sf = SuperFrame::padded_union(a, b);
  return {std::move(sf), well_conditioned_matrix(rng, n1, n1),
          well_conditioned_matrix(rng, n2, n2)};
}

SuperInstance shared_support_super(SplitMix64& rng, int n1, int n2,
                                   int atoms) {
  DiscreteMeasureSpace space = random_measure(rng, atoms);
  std::vector<QVector> v1;
  std::vector<QVector> v2;
  for (int i = 0; i < atoms; ++i) {
    QVector f = atoms >= n1 ? QVector::basis(n1, i % n1) + random_qvector(rng, n1) * 0.3
                            : random_qvector(rng, n1);
    QVector g = atoms >= n2 ? QVector::basis(n2, i % n2) + random_qvector(rng, n2) * 0.3
                            : random_qvector(rng, n2);
    v1.push_back(std::move(f));
    v2.push_back(std::move(g));
  }
  SuperFrame sf{FrameFamily(space, std::move(v1), n1),
                FrameFamily(DiscreteMeasureSpace(space.weights()),
                            std::move(v2), n2)};
  return {std::move(sf), well_conditioned_matrix(rng, n1, n1),
          well_conditioned_matrix(rng, n2, n2)};
}

}  // namespace qframes
