#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qframes/measure.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Finite family {f_i} in H^n indexed by the atoms of a weighted measure.
struct FrameFamily {
  DiscreteMeasureSpace space;
  std::vector<QVector> vectors;
  int dim = 0;

  FrameFamily(DiscreteMeasureSpace s, std::vector<QVector> v, int n);

  int atoms() const { return space.size(); }
};

/// The standard operators of a family.  Raw analysis/synthesis act on plain
/// coefficient tuples; the whitened synthesis absorbs sqrt(mu_i) into column
/// i so that ordinary adjoints and norms match the weighted ones.
struct OperatorBundle {
  QMatrix theta;               // atoms x dim, row i = f_i^*
  QMatrix preframe;            // dim x atoms, column i = f_i mu_i
  QMatrix frame_op;            // dim x dim, sum of mu_i f_i f_i^*
  QMatrix synthesis_whitened;  // dim x atoms, column i = sqrt(mu_i) f_i
};

OperatorBundle build_bundle(const FrameFamily& fam);

/// Whitened analysis operator, adjoint of the whitened synthesis.
QMatrix analysis_whitened(const OperatorBundle& bundle);

/// Total reconstruction energy of u through the family, computed three ways
/// that must agree: direct weighted sum of |<f_i|u>|^2, the quadratic form
/// of the frame operator, and the weighted norm of the analysis image.
struct EnergyTriple {
  double direct_sum = 0.0;
  double quadratic_form = 0.0;
  double analysis_norm_sq = 0.0;
};
EnergyTriple frame_energy(const FrameFamily& fam, const QVector& u);

enum class Classification { NotBessel, BesselOnly, Frame, Parseval, KFrame };

std::string to_string(Classification c);

/// Optimal constants.  lower/upper are the extreme eigenvalues of the frame
/// operator; k_lower is the best c with c K K* <= S (+infinity for K = 0,
/// and equal to lower when K is the identity).
struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  double k_lower = 0.0;
  Classification cls = Classification::BesselOnly;
};

FrameBounds frame_bounds(const FrameFamily& fam);
FrameBounds frame_bounds(const FrameFamily& fam, const QMatrix& k);

struct KFrameOptions {
  double tol = 1e-9;
  std::uint64_t seed = 20260815u;
  int samples = 64;
};

/// The four equivalent ways a family can frame the range of K, each decided
/// by its own computation:
///   (i)   the sampled lower inequality c ||K* u||^2 <= <S u, u> probed over
///         eigenvector, column, and random directions;
///   (ii)  range inclusion of K into the whitened synthesis;
///   (iii) existence of c > 0 with c K K* <= S, decided by the kernel
///         criterion plus a spectral certificate at the optimal constant;
///   (iv)  a least-squares factorization K = T X through the synthesis.
struct KFrameReport {
  FrameBounds bounds;

  bool lower_bound = false;
  double sampled_min_ratio = 0.0;
  double sampled_floor = 0.0;

  bool range = false;
  double range_residual = 0.0;

  bool majorized = false;
  double kernel_residual = 0.0;
  double certificate_eigenvalue = 0.0;

  bool factorization = false;
  double factorization_residual = 0.0;

  double c_opt = 0.0;  // largest c with c K K* <= S; +infinity when K = 0

  bool conditions_agree = false;
  bool is_kframe = false;  // all four conditions hold
};

KFrameReport kframe_check(const FrameFamily& fam, const QMatrix& k,
                          const KFrameOptions& opts = {});

/// Normalized partition family f_i = basis_i / sqrt(mu_i); its frame
/// operator is the identity for any positive weights.  The one-argument
/// form uses the standard basis.
FrameFamily parseval_from_partition(const DiscreteMeasureSpace& space);
FrameFamily parseval_from_partition(const DiscreteMeasureSpace& space,
                                    const std::vector<QVector>& basis);

/// A family is minimal exactly when its pre-frame operator is injective,
/// i.e. the (whitened) synthesis has full column rank.  The analysis-side
/// injectivity and the no-zero-vector consequence are reported as
/// diagnostics only.
struct MinimalityReport {
  bool minimal = false;
  int synthesis_rank = 0;
  bool theta_injective = false;  // rank of analysis == dim
  bool nonvanishing = false;     // no f_i is the zero vector
};

MinimalityReport minimality(const FrameFamily& fam);
bool is_minimal(const FrameFamily& fam);

/// Image family {M f_i} over the same measure.
FrameFamily map_family(const QMatrix& m, const FrameFamily& fam);

}  // namespace qframes
