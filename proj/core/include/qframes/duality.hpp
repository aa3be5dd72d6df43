#pragma once

#include "qframes/frames.hpp"
#include "qframes/measure.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/spectral.hpp"
#include "qframes/superspace.hpp"

namespace qframes {

/// Bounded map from the frame space into weighted L2 over the atoms.
/// The matrix is stored unweighted ((Gu)(omega_i) is literally row i of g
/// applied to u); anything metric inserts the weight isometry explicitly.
struct DualMapping {
  DiscreteMeasureSpace space;
  QMatrix g;  // atoms x dim

  DualMapping(DiscreteMeasureSpace s, QMatrix mat);

  int atoms() const { return space.size(); }
  int dim() const { return g.cols(); }

  L2Vector apply(const QVector& u) const;
};

/// Image of the mapping under the whitening isometry; norms and adjoints
/// of the mapping equal the plain ones of this matrix.
QMatrix whitened(const DualMapping& d);

double dual_opnorm(const DualMapping& d);

struct KDualCheck {
  bool ok = false;
  double residual = 0.0;
};

/// G is a K-dual to F when the synthesis recovers K: T G = K.
KDualCheck is_kdual(const FrameFamily& fam, const QMatrix& k,
                    const DualMapping& d, double tol = kDefaultTol);

/// Minimal-norm K-dual, built by factoring K through the whitened
/// synthesis.  Requires the family to actually be a K-frame.
DualMapping kdual_via_douglas(const FrameFamily& fam, const QMatrix& k,
                              double tol = kDefaultTol);

/// G composed with X on the frame-space side; a K-dual becomes a KX-dual.
DualMapping compose_dual(const DualMapping& d, const QMatrix& x);

/// (G1 (+) G2)(u (+) v) = G1 u + G2 v pointwise on atoms.
DualMapping direct_sum_dual(const DualMapping& g1, const DualMapping& g2);

/// A K1 (+) K2 dual of the combined family that splits as G1 (+) G2 yields
/// component duals; both residuals are bounded by the premise residual.
struct SplitDualReport {
  double premise_residual = 0.0;
  KDualCheck part1;
  KDualCheck part2;
  bool verdict = false;
};

SplitDualReport split_super_dual(const SuperFrame& sf, const QMatrix& k1,
                                 const QMatrix& k2, const DualMapping& g1,
                                 const DualMapping& g2,
                                 double tol = kDefaultTol);

/// Given component duals G1, G2, the merged mapping G1 (+) G2 is a
/// K1 (+) K2 dual of the combined family exactly when the cross products
/// T1 G2 and T2 G1 vanish.  Both sides are evaluated independently and
/// must agree.  Whether the components are full frames is reported but not
/// required.
struct CrossAnnihilationReport {
  double premise1_residual = 0.0;
  double premise2_residual = 0.0;

  bool merged = false;  // (a)
  double merged_residual = 0.0;

  bool annihilation = false;  // (b)
  double t1g2_norm = 0.0;
  double t2g1_norm = 0.0;

  bool equivalence_agrees = false;
  bool f1_is_frame = false;
  bool f2_is_frame = false;
};

CrossAnnihilationReport cross_annihilation_equivalence(
    const SuperFrame& sf, const QMatrix& k1, const QMatrix& k2,
    const DualMapping& g1, const DualMapping& g2, double tol = kDefaultTol);

}  // namespace qframes
