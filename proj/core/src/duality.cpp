#include "qframes/duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qframes/douglas.hpp"
#include "qframes/errors.hpp"

namespace qframes {

DualMapping::DualMapping(DiscreteMeasureSpace s, QMatrix mat)
    : space(std::move(s)), g(std::move(mat)) {
  if (g.rows() != space.size()) {
    throw DimensionError("DualMapping: one row per atom required");
  }
}

L2Vector DualMapping::apply(const QVector& u) const {
  return L2Vector(space, g * u);
}

QMatrix whitened(const DualMapping& d) {
  QMatrix out = d.g;
  for (int i = 0; i < out.rows(); ++i) {
    const double root = std::sqrt(d.space.weight(i));
    for (int j = 0; j < out.cols(); ++j) out(i, j) = out(i, j) * root;
  }
  return out;
}

double dual_opnorm(const DualMapping& d) { return opnorm(whitened(d)); }

KDualCheck is_kdual(const FrameFamily& fam, const QMatrix& k,
                    const DualMapping& d, double tol) {
  if (!(fam.space == d.space)) {
    throw DimensionError("is_kdual: family and dual use different measures");
  }
  if (k.rows() != fam.dim || k.cols() != d.dim() || d.dim() != fam.dim) {
    throw DimensionError("is_kdual: dimension mismatch");
  }
  OperatorBundle b = build_bundle(fam);
  KDualCheck out;
  out.residual = opnorm(k - b.preframe * d.g);
  out.ok = out.residual <= tol * std::max(1.0, opnorm(k));
  return out;
}

DualMapping kdual_via_douglas(const FrameFamily& fam, const QMatrix& k,
                              double tol) {
  KFrameReport check = kframe_check(fam, k);
  if (!check.is_kframe) {
    throw PreconditionError("kdual_via_douglas: family is not a K-frame");
  }
  OperatorBundle b = build_bundle(fam);
  QMatrix x = douglas_factor(k, b.synthesis_whitened, tol);
  // unweight back to the raw convention: row i picks up 1/sqrt(mu_i)
  for (int i = 0; i < x.rows(); ++i) {
    const double inv_root = 1.0 / std::sqrt(fam.space.weight(i));
    for (int j = 0; j < x.cols(); ++j) x(i, j) = x(i, j) * inv_root;
  }
  return DualMapping(fam.space, std::move(x));
}

DualMapping compose_dual(const DualMapping& d, const QMatrix& x) {
  if (x.rows() != d.dim() || x.cols() != d.dim()) {
    throw DimensionError("compose_dual: X must be square on the frame space");
  }
  return DualMapping(d.space, d.g * x);
}

DualMapping direct_sum_dual(const DualMapping& g1, const DualMapping& g2) {
  if (!(g1.space == g2.space)) {
    throw DimensionError("direct_sum_dual: mappings use different measures");
  }
  return DualMapping(g1.space, QMatrix::hcat(g1.g, g2.g));
}

SplitDualReport split_super_dual(const SuperFrame& sf, const QMatrix& k1,
                                 const QMatrix& k2, const DualMapping& g1,
                                 const DualMapping& g2, double tol) {
  FrameFamily combined = sf.combined();
  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  DualMapping merged = direct_sum_dual(g1, g2);
  KDualCheck premise = is_kdual(combined, k.mat, merged, tol);
  if (!premise.ok) {
    throw PreconditionError(
        "split_super_dual: G1 (+) G2 is not a K1 (+) K2 dual (residual " +
        std::to_string(premise.residual) + ")");
  }
  SplitDualReport rep;
  rep.premise_residual = premise.residual;
  rep.part1 = is_kdual(sf.f1, k1, g1, tol);
  rep.part2 = is_kdual(sf.f2, k2, g2, tol);
  rep.verdict = rep.part1.ok && rep.part2.ok;
  return rep;
}

CrossAnnihilationReport cross_annihilation_equivalence(
    const SuperFrame& sf, const QMatrix& k1, const QMatrix& k2,
    const DualMapping& g1, const DualMapping& g2, double tol) {
  KDualCheck p1 = is_kdual(sf.f1, k1, g1, tol);
  KDualCheck p2 = is_kdual(sf.f2, k2, g2, tol);
  if (!p1.ok || !p2.ok) {
    throw PreconditionError(
        "cross_annihilation_equivalence: G1, G2 must be component K-duals");
  }
  CrossAnnihilationReport rep;
  rep.premise1_residual = p1.residual;
  rep.premise2_residual = p2.residual;

  FrameFamily combined = sf.combined();
  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  DualMapping merged = direct_sum_dual(g1, g2);
  KDualCheck a = is_kdual(combined, k.mat, merged, tol);
  rep.merged = a.ok;
  rep.merged_residual = a.residual;

  OperatorBundle b1 = build_bundle(sf.f1);
  OperatorBundle b2 = build_bundle(sf.f2);
  rep.t1g2_norm = opnorm(b1.preframe * g2.g);
  rep.t2g1_norm = opnorm(b2.preframe * g1.g);
  const double scale = std::max(1.0, opnorm(k.mat));
  rep.annihilation =
      rep.t1g2_norm <= tol * scale && rep.t2g1_norm <= tol * scale;

  rep.equivalence_agrees = rep.merged == rep.annihilation;
  rep.f1_is_frame = frame_bounds(sf.f1).cls == Classification::Frame ||
                    frame_bounds(sf.f1).cls == Classification::Parseval;
  rep.f2_is_frame = frame_bounds(sf.f2).cls == Classification::Frame ||
                    frame_bounds(sf.f2).cls == Classification::Parseval;
  return rep;
}

}  // namespace qframes
