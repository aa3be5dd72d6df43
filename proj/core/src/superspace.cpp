#include "qframes/superspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

QVector concat(const QVector& a, const QVector& b) {
  QVector out(a.dim() + b.dim());
  for (int i = 0; i < a.dim(); ++i) out[i] = a[i];
  for (int i = 0; i < b.dim(); ++i) out[a.dim() + i] = b[i];
  return out;
}

double min_herm_eig(const QMatrix& m) {
  std::vector<double> ev = herm_eigvals((m + adjoint(m)) * 0.5);
  return ev.empty() ? 0.0 : ev.front();
}

}  // namespace

QVector SuperVector::joined() const { return concat(left, right); }

SuperVector SuperVector::split(const QVector& w, int n1) {
  if (n1 < 0 || n1 > w.dim()) {
    throw DimensionError("SuperVector::split: bad split point");
  }
  SuperVector out{QVector(n1), QVector(w.dim() - n1)};
  for (int i = 0; i < n1; ++i) out.left[i] = w[i];
  for (int i = n1; i < w.dim(); ++i) out.right[i - n1] = w[i];
  return out;
}

Quaternion inner(const SuperVector& a, const SuperVector& b) {
  return inner(a.left, b.left) + inner(a.right, b.right);
}

SuperOperator::SuperOperator(QMatrix m, int first, int second)
    : mat(std::move(m)), n1(first), n2(second) {
  if (n1 < 0 || n2 < 0 || mat.rows() != n1 + n2 || mat.cols() != n1 + n2) {
    throw DimensionError("SuperOperator: matrix must be square on the sum");
  }
}

SuperOperator SuperOperator::direct_sum(const QMatrix& k1, const QMatrix& k2) {
  if (k1.rows() != k1.cols() || k2.rows() != k2.cols()) {
    throw DimensionError("SuperOperator::direct_sum: blocks must be square");
  }
  const int n1 = k1.rows();
  const int n2 = k2.rows();
  QMatrix m(n1 + n2, n1 + n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n1; ++j) m(i, j) = k1(i, j);
  }
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) m(n1 + i, n1 + j) = k2(i, j);
  }
  return SuperOperator(std::move(m), n1, n2);
}

SuperOperator SuperOperator::projection1(int n1, int n2) {
  QMatrix m(n1 + n2, n1 + n2);
  for (int i = 0; i < n1; ++i) m(i, i) = Quaternion::one();
  return SuperOperator(std::move(m), n1, n2);
}

SuperOperator SuperOperator::projection2(int n1, int n2) {
  QMatrix m(n1 + n2, n1 + n2);
  for (int i = 0; i < n2; ++i) m(n1 + i, n1 + i) = Quaternion::one();
  return SuperOperator(std::move(m), n1, n2);
}

SuperVector SuperOperator::apply(const SuperVector& w) const {
  if (w.left.dim() != n1 || w.right.dim() != n2) {
    throw DimensionError("SuperOperator::apply: block dims mismatch");
  }
  return SuperVector::split(mat * w.joined(), n1);
}

QMatrix SuperOperator::slice1() const { return mat.block(0, 0, n1, n1 + n2); }

QMatrix SuperOperator::slice2() const { return mat.block(n1, 0, n2, n1 + n2); }

SuperFrame::SuperFrame(FrameFamily a, FrameFamily b)
    : f1(std::move(a)), f2(std::move(b)) {
  if (!(f1.space == f2.space)) {
    throw DimensionError("SuperFrame: components must share one measure space");
  }
}

FrameFamily SuperFrame::combined() const {
  std::vector<QVector> vectors;
  vectors.reserve(f1.vectors.size());
  for (std::size_t i = 0; i < f1.vectors.size(); ++i) {
    vectors.push_back(concat(f1.vectors[i], f2.vectors[i]));
  }
  return FrameFamily(f1.space, std::move(vectors), f1.dim + f2.dim);
}

SuperFrame SuperFrame::padded_union(const FrameFamily& a,
                                    const FrameFamily& b) {
  std::vector<double> weights = a.space.weights();
  weights.insert(weights.end(), b.space.weights().begin(),
                 b.space.weights().end());
  DiscreteMeasureSpace space(std::move(weights));

  std::vector<QVector> va = a.vectors;
  va.resize(static_cast<std::size_t>(space.size()), QVector(a.dim));
  std::vector<QVector> vb(static_cast<std::size_t>(a.atoms()),
                          QVector(b.dim));
  vb.insert(vb.end(), b.vectors.begin(), b.vectors.end());

  return SuperFrame(FrameFamily(space, std::move(va), a.dim),
                    FrameFamily(DiscreteMeasureSpace(space.weights()),
                                std::move(vb), b.dim));
}

SuperBundleReport super_bundle(const SuperFrame& sf) {
  SuperBundleReport rep{build_bundle(sf.combined()), build_bundle(sf.f1),
                        build_bundle(sf.f2)};

  QMatrix theta_blocks = QMatrix::hcat(rep.first.theta, rep.second.theta);
  rep.analysis_residual = (rep.sum.theta - theta_blocks).max_abs_entry();

  QMatrix synth_blocks = QMatrix::vcat(rep.first.synthesis_whitened,
                                       rep.second.synthesis_whitened);
  rep.synthesis_residual =
      (rep.sum.synthesis_whitened - synth_blocks).max_abs_entry();

  const QMatrix cross12 = rep.first.preframe * rep.second.theta;
  const QMatrix cross21 = rep.second.preframe * rep.first.theta;
  QMatrix s_blocks = QMatrix::vcat(
      QMatrix::hcat(rep.first.frame_op, cross12),
      QMatrix::hcat(cross21, rep.second.frame_op));
  rep.frame_op_residual = (rep.sum.frame_op - s_blocks).max_abs_entry();

  rep.max_residual = std::max({rep.analysis_residual, rep.synthesis_residual,
                               rep.frame_op_residual});
  return rep;
}

BesselSumReport bessel_sum_equivalence(const SuperFrame& sf) {
  BesselSumReport rep;
  rep.b_sum = frame_bounds(sf.combined()).upper;
  rep.b1 = frame_bounds(sf.f1).upper;
  rep.b2 = frame_bounds(sf.f2).upper;
  const double top = std::max(rep.b1, rep.b2);
  const double slack = 1e-9 * std::max(1.0, rep.b_sum);
  rep.upper_ok = rep.b_sum <= 2.0 * top + slack;
  rep.lower_ok = rep.b_sum >= top - slack;
  return rep;
}

ComponentInequalityReport component_inequalities(const SuperFrame& sf,
                                                 const SuperOperator& k,
                                                 double a, double b) {
  if (k.n1 != sf.f1.dim || k.n2 != sf.f2.dim) {
    throw DimensionError("component_inequalities: block split mismatch");
  }
  if (!(a > 0.0) || !(b >= a) || !std::isfinite(b)) {
    throw PreconditionError("component_inequalities: invalid bounds");
  }
  ComponentInequalityReport rep;

  const QMatrix k1 = k.slice1();
  const QMatrix k2 = k.slice2();
  const QMatrix k_adj = adjoint(k.mat);
  const int n = k.n1 + k.n2;

  // K^* (u (+) 0) = K1^* u and K^* (0 (+) v) = K2^* v, as column blocks
  QMatrix left_cols = k_adj.block(0, 0, n, k.n1);
  QMatrix right_cols = k_adj.block(0, k.n1, n, k.n2);
  rep.adjoint_identities_exact =
      (left_cols - adjoint(k1)).max_abs_entry() == 0.0 &&
      (right_cols - adjoint(k2)).max_abs_entry() == 0.0;

  const QMatrix s1 = build_bundle(sf.f1).frame_op;
  const QMatrix s2 = build_bundle(sf.f2).frame_op;

  const double slack1 =
      1e-8 * std::max({1.0, opnorm(s1), a * std::pow(opnorm(k1), 2)});
  const double slack2 =
      1e-8 * std::max({1.0, opnorm(s2), a * std::pow(opnorm(k2), 2)});

  const double low1 = min_herm_eig(s1 - (k1 * adjoint(k1)) * a);
  const double low2 = min_herm_eig(s2 - (k2 * adjoint(k2)) * a);
  const double up1 = min_herm_eig(QMatrix::identity(sf.f1.dim) * b - s1);
  const double up2 = min_herm_eig(QMatrix::identity(sf.f2.dim) * b - s2);

  rep.ineq1_lower = low1 >= -slack1;
  rep.ineq2_lower = low2 >= -slack2;
  rep.ineq1_upper = up1 >= -1e-8 * std::max(1.0, b);
  rep.ineq2_upper = up2 >= -1e-8 * std::max(1.0, b);
  rep.worst_margin = std::min({low1, low2, up1, up2});
  rep.all_hold = rep.adjoint_identities_exact && rep.ineq1_lower &&
                 rep.ineq1_upper && rep.ineq2_lower && rep.ineq2_upper;
  return rep;
}

SufficiencyReport k1k2_sufficiency(const SuperFrame& sf, const QMatrix& k1,
                                   const QMatrix& k2, double tol) {
  KFrameReport r1 = kframe_check(sf.f1, k1);
  KFrameReport r2 = kframe_check(sf.f2, k2);
  if (!r1.is_kframe || !r2.is_kframe) {
    throw PreconditionError(
        "k1k2_sufficiency: components must pass their own K-frame checks");
  }
  SufficiencyReport rep;
  rep.c1 = r1.c_opt;
  rep.c2 = r2.c_opt;
  rep.claimed_lower = std::min(rep.c1, rep.c2);

  OperatorBundle b1 = build_bundle(sf.f1);
  OperatorBundle b2 = build_bundle(sf.f2);
  const QMatrix theta1_w = analysis_whitened(b1);
  const QMatrix theta2_w = analysis_whitened(b2);
  rep.cross12_norm = opnorm(b1.synthesis_whitened * theta2_w);
  rep.cross21_norm = opnorm(b2.synthesis_whitened * theta1_w);
  const double scale = std::max(
      1.0, opnorm(b1.synthesis_whitened) * opnorm(b2.synthesis_whitened));
  rep.applicable = rep.cross12_norm <= tol * scale &&
                   rep.cross21_norm <= tol * scale;

  FrameFamily combined = sf.combined();
  OperatorBundle bc = build_bundle(combined);
  QMatrix s_diag = QMatrix::vcat(
      QMatrix::hcat(b1.frame_op, QMatrix(sf.f1.dim, sf.f2.dim)),
      QMatrix::hcat(QMatrix(sf.f2.dim, sf.f1.dim), b2.frame_op));
  rep.s_block_diagonal = opnorm(bc.frame_op - s_diag) <=
                         tol * std::max(1.0, opnorm(bc.frame_op));

  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  KFrameReport rc = kframe_check(combined, k.mat);
  rep.combined_c_opt = rc.c_opt;
  rep.verdict = rep.applicable && rc.is_kframe &&
                rc.c_opt >= rep.claimed_lower - 1e-9;
  return rep;
}

NecessityReport k1k2_necessity(const SuperFrame& sf, const QMatrix& k1,
                               const QMatrix& k2, double tol) {
  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  FrameFamily combined = sf.combined();
  if (!kframe_check(combined, k.mat).is_kframe) {
    throw PreconditionError(
        "k1k2_necessity: combined family is not a K1 (+) K2 frame");
  }
  OperatorBundle b1 = build_bundle(sf.f1);
  OperatorBundle b2 = build_bundle(sf.f2);
  QMatrix kernel1 = nullspace(b1.synthesis_whitened);  // N(T1), whitened
  QMatrix kernel2 = nullspace(b2.synthesis_whitened);

  NecessityReport rep;
  rep.incl1 = range_inclusion(k1, b1.synthesis_whitened * kernel2, tol);
  rep.incl2 = range_inclusion(k2, b2.synthesis_whitened * kernel1, tol);
  rep.verdict = rep.incl1.included && rep.incl2.included;

  rep.transposed_applicable = sf.f1.dim == sf.f2.dim;
  if (rep.transposed_applicable) {
    rep.transposed1 =
        range_inclusion(k1, b2.synthesis_whitened * kernel1, tol);
    rep.transposed2 =
        range_inclusion(k2, b1.synthesis_whitened * kernel2, tol);
  }
  return rep;
}

ObstructionReport identical_pair_obstruction(const FrameFamily& fam,
                                             const QMatrix& k1,
                                             const QMatrix& k2, double tol) {
  if (k1.rows() != fam.dim || k1.cols() != fam.dim ||
      k2.rows() != fam.dim || k2.cols() != fam.dim) {
    throw DimensionError(
        "identical_pair_obstruction: K blocks must be square on the family");
  }
  ObstructionReport rep;
  const double n1 = opnorm(k1);
  const double n2 = opnorm(k2);
  rep.k1_zero = n1 <= tol;
  rep.k2_zero = n2 <= tol;
  rep.theorem_verdict = rep.k1_zero && rep.k2_zero;

  SuperFrame pair{fam, fam};
  SuperOperator k = SuperOperator::direct_sum(k1, k2);
  rep.is_kframe = kframe_check(pair.combined(), k.mat).is_kframe;

  if (!rep.is_kframe) {
    // witness direction: maximize ||K1^* u|| (or K2 when K1 vanishes)
    const QMatrix& kw = rep.k1_zero ? k2 : k1;
    HermEig eig = herm_eig(kw * adjoint(kw));
    rep.witness = eig.eigenvectors.back();
    const QVector& u = rep.witness;
    const QVector mu = -u;
    for (int i = 0; i < fam.atoms(); ++i) {
      const QVector& f = fam.vectors[static_cast<std::size_t>(i)];
      Quaternion term = inner(f, u) + inner(f, mu);
      rep.witness_energy += fam.space.weight(i) * term.norm_sq();
    }
    rep.witness_k_norm_sq =
        (adjoint(k1) * u).norm_sq() + (adjoint(k2) * mu).norm_sq();
  }
  return rep;
}

SuperMinimalityReport super_minimality(const SuperFrame& sf,
                                       const SuperOperator& k, double tol) {
  FrameFamily combined = sf.combined();
  if (!kframe_check(combined, k.mat).is_kframe) {
    throw PreconditionError(
        "super_minimality: combined family is not a K-frame");
  }
  OperatorBundle b1 = build_bundle(sf.f1);
  OperatorBundle b2 = build_bundle(sf.f2);
  const QMatrix theta1_w = analysis_whitened(b1);
  const QMatrix theta2_w = analysis_whitened(b2);

  SuperMinimalityReport rep;
  rep.atoms = sf.f1.atoms();
  QMatrix stacked =
      QMatrix::vcat(b1.synthesis_whitened, b2.synthesis_whitened);
  rep.stacked_rank = rank(stacked);
  rep.minimal = rep.stacked_rank == rep.atoms;

  rep.orth_residual = opnorm(b2.synthesis_whitened * theta1_w);
  const double scale = std::max(
      1.0, opnorm(b1.synthesis_whitened) * opnorm(b2.synthesis_whitened));
  const bool orthogonal = rep.orth_residual <= tol * scale;
  rep.complement_in_range =
      range_inclusion(nullspace(b2.synthesis_whitened), theta1_w, tol);
  rep.closure_condition = orthogonal && rep.complement_in_range.included;
  rep.dimension_count_ok =
      rank(theta1_w) + rank(theta2_w) == rep.atoms;
  rep.implication_ok = !rep.closure_condition || rep.minimal;
  return rep;
}

}  // namespace qframes
