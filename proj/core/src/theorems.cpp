#include "qframes/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qframes/douglas.hpp"
#include "qframes/duality.hpp"
#include "qframes/embedding.hpp"
#include "qframes/errors.hpp"
#include "qframes/frames.hpp"
#include "qframes/generators.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"
#include "qframes/superspace.hpp"

namespace qframes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int draw_dim(SplitMix64& rng, int lo, int hi) {
  if (hi < lo) hi = lo;
  return lo + static_cast<int>(rng.next() %
                               static_cast<std::uint64_t>(hi - lo + 1));
}

bool fail(std::string& note, const char* what) {
  note = what;
  return false;
}

// Power iteration on A A^*; a few hundred rounds push every spectral weight
// below 0.9 * sigma_max down by 1e-27, so the Rayleigh estimate is a lower
// bound within 10% regardless of gaps.
double power_opnorm(const QMatrix& a, SplitMix64& rng) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  QMatrix b = a * adjoint(a);
  QVector v = random_unit_qvector(rng, b.rows());
  for (int it = 0; it < 300; ++it) {
    QVector w = b * v;
    const double nn = w.norm();
    if (nn <= 1e-300) return 0.0;
    v = w * (1.0 / nn);
  }
  const double rayleigh = inner(v, b * v).a0;
  return std::sqrt(std::max(0.0, rayleigh));
}

bool trial_qcore(SplitMix64& rng, int, double, std::string& note) {
  const Quaternion one = Quaternion::one();
  const Quaternion i = Quaternion::i();
  const Quaternion j = Quaternion::j();
  const Quaternion k = Quaternion::k();
  const Quaternion minus_one(-1.0);
  if (!(i * j == k && j * i == -k && j * k == i && k * j == -i &&
        k * i == j && i * k == -j && i * i == minus_one &&
        j * j == minus_one && k * k == minus_one && one * i == i)) {
    return fail(note, "multiplication table");
  }

  const Quaternion p = random_quaternion(rng);
  const Quaternion q = random_quaternion(rng);
  const Quaternion r = random_quaternion(rng);
  if (!close((p * q) * r, p * (q * r))) return fail(note, "associativity");
  if (!close(p * (q + r), p * q + p * r)) {
    return fail(note, "left distributivity");
  }
  if (!close((q + r) * p, q * p + r * p)) {
    return fail(note, "right distributivity");
  }
  if (!close(conj(p * q), conj(q) * conj(p))) {
    return fail(note, "conjugation reverses products");
  }
  if (std::fabs(abs(p * q) - abs(p) * abs(q)) >
      1e-12 * (1.0 + abs(p) * abs(q))) {
    return fail(note, "norm multiplicativity");
  }
  if (p.norm_sq() > 1e-6 && !close(p * p.inverse(), one)) {
    return fail(note, "inverse");
  }

  // the inner product is conjugate-linear on the left, right-linear on
  // the right
  QVector u = random_qvector(rng, 3);
  QVector v = random_qvector(rng, 3);
  if (!close(inner(u, v * q), inner(u, v) * q, 1e-10)) {
    return fail(note, "right linearity");
  }
  if (!close(inner(u * q, v), conj(q) * inner(u, v), 1e-10)) {
    return fail(note, "left conjugate linearity");
  }
  if (!close(inner(u, v), conj(inner(v, u)), 1e-10)) {
    return fail(note, "inner symmetry");
  }
  return true;
}

bool trial_qlinalg(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int m = draw_dim(rng, 1, max_dim);
  const int n = draw_dim(rng, 1, max_dim);
  const int p = draw_dim(rng, 1, max_dim);
  QMatrix a = random_matrix(rng, m, n);
  QMatrix b = random_matrix(rng, n, p);
  const double na = opnorm(a);
  const double nb = opnorm(b);

  ComplexEmbedding ea = embed(a);
  ComplexEmbedding eb = embed(b);
  const double mult_err =
      (ea.mat * eb.mat - embed(a * b).mat).cwiseAbs().maxCoeff();
  if (mult_err > 1e-12 * (1.0 + na * nb)) {
    return fail(note, "embedding multiplicativity");
  }
  Eigen::MatrixXcd ea_adj = ea.mat.adjoint();
  if ((ea_adj - embed(adjoint(a)).mat).cwiseAbs().maxCoeff() != 0.0) {
    return fail(note, "embedding adjoint");
  }
  if (!(unembed(ea) == a)) return fail(note, "embedding roundtrip");

  QVector u = random_qvector(rng, n);
  QVector v = random_qvector(rng, n);
  Eigen::VectorXcd lhs = ea.mat * embed_vector(u);
  Eigen::VectorXcd rhs = embed_vector(a * u);
  if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12 * (1.0 + na * u.norm())) {
    return fail(note, "vector equivariance");
  }
  if (std::fabs(embed_vector(u).norm() - u.norm()) >
      1e-12 * (1.0 + u.norm())) {
    return fail(note, "vector isometry");
  }
  if (abs(inner(u, v)) > u.norm() * v.norm() * (1.0 + 1e-12)) {
    return fail(note, "cauchy-schwarz");
  }

  const double oracle = power_opnorm(a, rng);
  if (!(oracle <= na * (1.0 + 1e-9)) || oracle < 0.9 * na) {
    return fail(note, "operator norm oracle");
  }
  if (opnorm(a * b) > na * nb * (1.0 + 1e-10) + 1e-14) {
    return fail(note, "submultiplicativity");
  }

  QMatrix api = pinv(a);
  if (opnorm(a * api * a - a) > 1e-9 * (1.0 + na)) {
    return fail(note, "pinv reproduction");
  }
  if (opnorm(api * a * api - api) > 1e-9 * (1.0 + opnorm(api))) {
    return fail(note, "pinv idempotence");
  }
  QMatrix proj = a * api;
  if (opnorm(proj - adjoint(proj)) > 1e-9) {
    return fail(note, "projector symmetry");
  }

  QMatrix h = a * adjoint(a);
  std::vector<double> ev = herm_eigvals(h);
  if (static_cast<int>(ev.size()) != m) return fail(note, "spectrum length");
  double trace = 0.0;
  for (int t = 0; t < m; ++t) trace += h(t, t).a0;
  double sum = 0.0;
  for (double e : ev) sum += e;
  if (std::fabs(sum - trace) > 1e-9 * (1.0 + std::fabs(trace))) {
    return fail(note, "trace identity");
  }
  if (!is_psd(h)) return fail(note, "gram positivity");
  QMatrix root = herm_sqrt(h);
  if (opnorm(root * root - h) > 1e-8 * (1.0 + opnorm(h))) {
    return fail(note, "square root");
  }

  const int r = draw_dim(rng, 1, std::min(m, n));
  QMatrix d = rank_deficient_matrix(rng, m, n, r);
  if (rank(d) != r) return fail(note, "rank");
  QMatrix z = nullspace(d);
  if (z.cols() > 0 && opnorm(d * z) > 1e-9 * (1.0 + opnorm(d))) {
    return fail(note, "nullspace annihilation");
  }
  const int nullity = z.cols() > 0 ? rank(z) : 0;
  if (nullity != n - r) return fail(note, "rank-nullity");

  std::vector<QVector> raw;
  const int count = draw_dim(rng, 1, n);
  for (int t = 0; t < count; ++t) raw.push_back(random_qvector(rng, n));
  try {
    std::vector<QVector> basis = gram_schmidt(raw);
    for (int s = 0; s < count; ++s) {
      for (int t = 0; t < count; ++t) {
        Quaternion g = inner(basis[static_cast<std::size_t>(s)],
                             basis[static_cast<std::size_t>(t)]);
        Quaternion expect =
            s == t ? Quaternion::one() : Quaternion::zero();
        if (!close(g, expect, 1e-10)) {
          return fail(note, "gram-schmidt orthonormality");
        }
      }
    }
  } catch (const PreconditionError&) {
    // dependent draw; measure zero, but not an orthogonalization failure
  }
  return true;
}

bool trial_energy(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int dim = draw_dim(rng, 1, max_dim);
  const bool framed = (rng.next() & 1) != 0;
  const int atoms = framed
                        ? dim + static_cast<int>(rng.next() % 4u)
                        : draw_dim(rng, 1, 2 * dim);
  FrameFamily fam = framed ? random_frame(rng, dim, atoms)
                           : random_bessel_family(rng, dim, atoms);
  OperatorBundle b = build_bundle(fam);
  const double s_norm = opnorm(b.frame_op);
  const double tol3 = 1e-10 * (1.0 + s_norm);

  for (int t = 0; t < 4; ++t) {
    QVector u = random_unit_qvector(rng, dim);
    EnergyTriple e = frame_energy(fam, u);
    if (std::fabs(e.direct_sum - e.quadratic_form) > tol3 ||
        std::fabs(e.direct_sum - e.analysis_norm_sq) > tol3) {
      return fail(note, "energy identity");
    }
    Quaternion q = random_quaternion(rng);
    EnergyTriple eq = frame_energy(fam, u * q);
    if (std::fabs(eq.direct_sum - e.direct_sum * q.norm_sq()) >
        tol3 * (1.0 + q.norm_sq())) {
      return fail(note, "right scalar covariance");
    }
  }

  FrameBounds fb = frame_bounds(fam);
  HermEig se = herm_eig(b.frame_op);
  if (!se.eigenvectors.empty()) {
    const double top = frame_energy(fam, se.eigenvectors.back()).direct_sum;
    const double bottom =
        frame_energy(fam, se.eigenvectors.front()).direct_sum;
    if (std::fabs(top - fb.upper) > 1e-8 * (1.0 + fb.upper)) {
      return fail(note, "upper bound attained");
    }
    if (std::fabs(bottom - fb.lower) > 1e-8 * (1.0 + fb.upper)) {
      return fail(note, "lower bound attained");
    }
    // optimality: shrinking B (or inflating A) loses an extremal direction
    if (fb.upper > 1e-12 && !(top > 0.99 * fb.upper)) {
      return fail(note, "upper optimality");
    }
    const bool is_frame = fb.cls == Classification::Frame ||
                          fb.cls == Classification::Parseval;
    if (is_frame && !(bottom < 1.01 * fb.lower)) {
      return fail(note, "lower optimality");
    }
  }
  return true;
}

bool trial_parseval(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int n = draw_dim(rng, 1, max_dim);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (double& x : w) {
    x = std::exp(rng.uniform(std::log(1e-2), std::log(1e2)));
  }
  DiscreteMeasureSpace space(std::move(w));

  FrameFamily fam = parseval_from_partition(space);
  FrameBounds fb = frame_bounds(fam);
  if (std::fabs(fb.lower - 1.0) > 1e-9 || std::fabs(fb.upper - 1.0) > 1e-9 ||
      fb.cls != Classification::Parseval) {
    return fail(note, "partition frame bounds");
  }
  QVector u = random_qvector(rng, n);
  EnergyTriple e = frame_energy(fam, u);
  if (std::fabs(e.direct_sum - u.norm_sq()) > 1e-9 * (1.0 + u.norm_sq())) {
    return fail(note, "energy preservation");
  }

  // any orthonormal basis works, not just the standard one
  for (int attempt = 0;; ++attempt) {
    std::vector<QVector> raw;
    for (int t = 0; t < n; ++t) raw.push_back(random_qvector(rng, n));
    try {
      FrameFamily rotated = parseval_from_partition(space, gram_schmidt(raw));
      FrameBounds rb = frame_bounds(rotated);
      if (std::fabs(rb.lower - 1.0) > 1e-9 ||
          std::fabs(rb.upper - 1.0) > 1e-9) {
        return fail(note, "rotated basis bounds");
      }
      break;
    } catch (const PreconditionError&) {
      if (attempt > 32) return fail(note, "basis generation");
    }
  }
  return true;
}

bool trial_douglas(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int rows = draw_dim(rng, 2, std::max(2, max_dim));
  const int cols_l = draw_dim(rng, 1, max_dim);
  const std::uint64_t which = rng.next();
  const bool feasible = (which & 1) == 0;
  const bool singular_m = feasible && (which & 2) != 0;
  DouglasInstance di =
      douglas_instance(rng, rows, cols_l, feasible, singular_m);

  DouglasReport rep = douglas_equivalence_report(di.l, di.m);
  if (rep.range_included != feasible || rep.majorized != feasible ||
      rep.factorizable != feasible) {
    return fail(note, "three-way agreement");
  }

  if (feasible) {
    const double c = min_majorization_constant(di.l, di.m);
    if (std::fabs(c - rep.c_min) > 1e-6 * (1.0 + c)) {
      return fail(note, "constant agreement");
    }
    if (!majorization_certificate(di.l, di.m, c).holds) {
      return fail(note, "certificate at the optimum");
    }
    if (majorization_certificate(di.l, di.m, 0.99 * c).holds) {
      return fail(note, "certificate strictness");
    }
    QMatrix x = douglas_factor(di.l, di.m);
    if (opnorm(di.m * x - di.l) > 1e-9 * (1.0 + opnorm(di.l))) {
      return fail(note, "factor residual");
    }
    const double xn = opnorm(x);
    if (std::fabs(xn * xn - c) > 1e-6 * (1.0 + c)) {
      return fail(note, "minimal factor norm");
    }
    if (std::fabs(rep.factor_norm * rep.factor_norm - c) > 1e-6 * (1.0 + c)) {
      return fail(note, "least-squares factor norm");
    }
    // sampled Rayleigh quotients never exceed the reported constant
    QMatrix ll = di.l * adjoint(di.l);
    QMatrix mm = di.m * adjoint(di.m);
    for (int t = 0; t < 16; ++t) {
      QVector wv = random_unit_qvector(rng, rows);
      const double den = inner(wv, mm * wv).a0;
      if (den <= 1e-12) continue;
      if (inner(wv, ll * wv).a0 / den > c * (1.0 + 1e-6)) {
        return fail(note, "rayleigh ceiling");
      }
    }
  } else {
    bool threw = false;
    try {
      min_majorization_constant(di.l, di.m);
    } catch (const InfeasibleError&) {
      threw = true;
    }
    if (!threw) return fail(note, "missing infeasibility error");
    threw = false;
    try {
      douglas_factor(di.l, di.m);
    } catch (const FactorizationError& e) {
      threw = e.residual > 0.5;  // the planted escape column is unit size
    }
    if (!threw) return fail(note, "missing factorization error");
  }
  return true;
}

bool trial_kframe(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int dim = draw_dim(rng, 2, std::max(2, max_dim));
  const std::uint64_t which = rng.next();
  const bool positive = (which & 1) == 0;

  if (!positive) {
    KFrameInstance inst = kframe_negative(rng, dim);
    KFrameReport rep = kframe_check(inst.fam, inst.k);
    if (!rep.conditions_agree) return fail(note, "four-way disagreement");
    if (rep.is_kframe) return fail(note, "negative instance accepted");
    return true;
  }

  const int atoms =
      dim + static_cast<int>(rng.next() % static_cast<std::uint64_t>(dim + 1));
  const bool singular_k = (which & 2) != 0;
  KFrameInstance inst = kframe_positive(rng, dim, atoms, singular_k);
  KFrameReport rep = kframe_check(inst.fam, inst.k);
  if (!rep.conditions_agree) return fail(note, "four-way disagreement");
  if (!rep.is_kframe) return fail(note, "positive instance rejected");
  if (!(rep.c_opt > 0.0) || !std::isfinite(rep.c_opt)) {
    return fail(note, "optimal constant");
  }
  if (rep.bounds.k_lower != rep.c_opt) return fail(note, "bounds mirror");

  OperatorBundle b = build_bundle(inst.fam);
  const QMatrix& s = b.frame_op;
  QMatrix kk = inst.k * adjoint(inst.k);
  const double slack = 1e-8 * std::max(1.0, opnorm(s));
  std::vector<double> hold_ev = herm_eigvals(s - kk * rep.c_opt);
  if (!hold_ev.empty() && hold_ev.front() < -slack) {
    return fail(note, "certificate at the optimum");
  }
  std::vector<double> fail_ev = herm_eigvals(s - kk * (1.01 * rep.c_opt));
  if (fail_ev.empty() || !(fail_ev.front() < -slack)) {
    return fail(note, "certificate strictness");
  }

  // sampled energy ratios never undercut the optimal constant
  QMatrix k_adj = adjoint(inst.k);
  for (int t = 0; t < 16; ++t) {
    QVector u = random_unit_qvector(rng, dim);
    const double den = (k_adj * u).norm_sq();
    if (den <= 1e-10) continue;
    if (inner(u, s * u).a0 / den < rep.c_opt * (1.0 - 1e-6)) {
      return fail(note, "ratio floor");
    }
  }

  DualMapping d = kdual_via_douglas(inst.fam, inst.k);
  if (!is_kdual(inst.fam, inst.k, d).ok) return fail(note, "douglas dual");

  QMatrix x = well_conditioned_matrix(rng, dim, dim);
  if (!kframe_check(inst.fam, inst.k * x).is_kframe) {
    return fail(note, "composition closure");
  }
  return true;
}

bool trial_superop(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int n1 = draw_dim(rng, 1, max_dim);
  const int n2 = draw_dim(rng, 1, max_dim);
  const int atoms =
      std::max(n1, n2) + static_cast<int>(rng.next() % 3u);
  SuperInstance si = shared_support_super(rng, n1, n2, atoms);

  SuperBundleReport sb = super_bundle(si.sf);
  if (sb.max_residual > 1e-12) return fail(note, "decomposition identities");
  BesselSumReport bs = bessel_sum_equivalence(si.sf);
  if (!bs.upper_ok || !bs.lower_ok) return fail(note, "bessel sandwich");

  SuperVector a{random_qvector(rng, n1), random_qvector(rng, n2)};
  SuperVector c{random_qvector(rng, n1), random_qvector(rng, n2)};
  if (!close(inner(a, c),
             inner(a.joined(), c.joined()), 1e-12)) {
    return fail(note, "inner additivity");
  }
  SuperVector back = SuperVector::split(a.joined(), n1);
  if (!close(back.left, a.left, 0.0) || !close(back.right, a.right, 0.0)) {
    return fail(note, "split roundtrip");
  }

  SuperOperator k = SuperOperator::direct_sum(si.k1, si.k2);
  SuperVector kw = k.apply(a);
  if (!close(kw.left, si.k1 * a.left, 0.0) ||
      !close(kw.right, si.k2 * a.right, 0.0)) {
    return fail(note, "blockwise action");
  }
  QMatrix k_adj = adjoint(k.mat);
  if (!(k_adj.block(0, 0, n1 + n2, n1) ==
        QMatrix::vcat(adjoint(si.k1), QMatrix(n2, n1)))) {
    return fail(note, "adjoint splits");
  }
  SuperVector pa = SuperOperator::projection1(n1, n2).apply(a);
  if (!close(pa.left, a.left, 0.0) || !pa.right.is_zero()) {
    return fail(note, "first projection");
  }
  SuperVector pb = SuperOperator::projection2(n1, n2).apply(a);
  if (!pb.left.is_zero() || !close(pb.right, a.right, 0.0)) {
    return fail(note, "second projection");
  }

  // component inequalities at the combined family's certified bounds
  SuperInstance dj = disjoint_support_super(rng, n1, n2, n1 + 1, n2 + 1);
  SuperOperator dk = SuperOperator::direct_sum(dj.k1, dj.k2);
  KFrameReport rc = kframe_check(dj.sf.combined(), dk.mat);
  if (!rc.is_kframe) return fail(note, "disjoint combined check");
  // any valid lower constant works; cap at B since c_opt may exceed it
  // when K is a contraction
  ComponentInequalityReport ci = component_inequalities(
      dj.sf, dk, std::min(rc.c_opt, rc.bounds.upper), rc.bounds.upper);
  if (!ci.all_hold) return fail(note, "component inequalities");
  return true;
}

bool trial_obstruction(SplitMix64& rng, int max_dim, double,
                       std::string& note) {
  const int dim = draw_dim(rng, 2, std::max(2, max_dim));
  const int atoms = draw_dim(rng, 1, 2 * dim);
  FrameFamily fam = random_bessel_family(rng, dim, atoms);
  const int variant = static_cast<int>(rng.next() % 3u);
  QMatrix k1 = variant == 2 ? QMatrix(dim, dim)
                            : well_conditioned_matrix(rng, dim, dim);
  QMatrix k2 = variant >= 1 ? QMatrix(dim, dim)
                            : well_conditioned_matrix(rng, dim, dim);

  ObstructionReport rep = identical_pair_obstruction(fam, k1, k2);
  if (rep.is_kframe != rep.theorem_verdict) {
    return fail(note, "verdict equivalence");
  }
  if (variant == 2) {
    if (!rep.is_kframe) return fail(note, "zero pair rejected");
    return true;
  }
  if (rep.is_kframe) return fail(note, "nonzero pair accepted");
  if (rep.witness.dim() != dim) return fail(note, "witness shape");
  if (rep.witness_energy != 0.0) return fail(note, "witness energy");
  if (!(rep.witness_k_norm_sq > 1e-4)) return fail(note, "witness separation");
  return true;
}

bool trial_sufficiency(SplitMix64& rng, int max_dim, double,
                       std::string& note) {
  const int cap = std::max(1, max_dim - 1);
  const int n1 = draw_dim(rng, 1, cap);
  const int n2 = draw_dim(rng, 1, cap);
  const int m1 = n1 + static_cast<int>(rng.next() % 3u);
  const int m2 = n2 + static_cast<int>(rng.next() % 3u);
  SuperInstance si = disjoint_support_super(rng, n1, n2, m1, m2);

  SufficiencyReport suf = k1k2_sufficiency(si.sf, si.k1, si.k2);
  if (!suf.applicable || !suf.s_block_diagonal) {
    return fail(note, "cross terms");
  }
  if (!suf.verdict) return fail(note, "sufficiency verdict");
  if (suf.combined_c_opt < suf.claimed_lower - 1e-9) {
    return fail(note, "combined lower constant");
  }
  NecessityReport nec = k1k2_necessity(si.sf, si.k1, si.k2);
  if (!nec.verdict) return fail(note, "necessity inclusions");

  // minimality of a disjoint union against the per-component rank count
  const bool keep_minimal = (rng.next() & 1) != 0;
  const int mm1 = keep_minimal ? draw_dim(rng, 1, n1)
                               : n1 + 1 + static_cast<int>(rng.next() % 2u);
  const int mm2 = draw_dim(rng, 1, n2);
  SuperInstance sm = disjoint_support_super(rng, n1, n2, mm1, mm2);
  OperatorBundle sb1 = build_bundle(sm.sf.f1);
  OperatorBundle sb2 = build_bundle(sm.sf.f2);
  SuperOperator ks = SuperOperator::direct_sum(sb1.frame_op, sb2.frame_op);
  SuperMinimalityReport smin = super_minimality(sm.sf, ks);
  if (smin.minimal != keep_minimal) return fail(note, "minimality oracle");
  if (smin.closure_condition != keep_minimal) {
    return fail(note, "closure oracle");
  }
  if (!smin.implication_ok) return fail(note, "closure implication");

  // a minimal first component forces the second K block to vanish
  const int cm = draw_dim(rng, 1, n1);
  FrameFamily f1 = random_bessel_family(rng, n1, cm);
  if (!is_minimal(f1)) return fail(note, "minimal setup");
  FrameFamily f2(DiscreteMeasureSpace(f1.space.weights()),
                 std::vector<QVector>(static_cast<std::size_t>(cm),
                                      QVector(n2)),
                 n2);
  SuperFrame pair{f1, f2};
  OperatorBundle cb1 = build_bundle(f1);
  QMatrix k1c =
      cb1.synthesis_whitened * well_conditioned_matrix(rng, cm, n1);
  KFrameReport ok = kframe_check(
      pair.combined(), SuperOperator::direct_sum(k1c, QMatrix(n2, n2)).mat);
  if (!ok.is_kframe) return fail(note, "vanishing block rejected");
  QMatrix k2bad = well_conditioned_matrix(rng, n2, n2);
  KFrameReport bad = kframe_check(
      pair.combined(), SuperOperator::direct_sum(k1c, k2bad).mat);
  if (bad.is_kframe) return fail(note, "nonzero block accepted");
  return true;
}

bool trial_duality(SplitMix64& rng, int max_dim, double, std::string& note) {
  const int dim = draw_dim(rng, 1, max_dim);
  const int atoms = dim + 1 + static_cast<int>(rng.next() % 3u);
  FrameFamily fam = random_frame(rng, dim, atoms);
  OperatorBundle b = build_bundle(fam);
  QMatrix eye = QMatrix::identity(dim);

  DualMapping canonical(fam.space, b.theta * pinv(b.frame_op));
  if (!is_kdual(fam, eye, canonical).ok) return fail(note, "canonical dual");
  DualMapping via_factor = kdual_via_douglas(fam, eye);
  if (opnorm(via_factor.g - canonical.g) >
      1e-8 * std::max(1.0, opnorm(canonical.g))) {
    return fail(note, "canonical coincidence");
  }
  QVector u = random_qvector(rng, dim);
  QVector rec = b.preframe * (canonical.g * u);
  if (!close(rec, u, 1e-8 * (1.0 + u.norm()))) {
    return fail(note, "reconstruction");
  }

  QMatrix k = well_conditioned_matrix(rng, dim, dim);
  DualMapping dk = kdual_via_douglas(fam, k);
  if (!is_kdual(fam, k, dk).ok) return fail(note, "k-dual");
  QMatrix x = well_conditioned_matrix(rng, dim, dim);
  if (!is_kdual(fam, k * x, compose_dual(dk, x)).ok) {
    return fail(note, "dual composition");
  }

  // atomwise action of a summed dual
  const int n2 = draw_dim(rng, 1, max_dim);
  DualMapping g1(fam.space, random_matrix(rng, atoms, dim));
  DualMapping g2(fam.space, random_matrix(rng, atoms, n2));
  DualMapping merged = direct_sum_dual(g1, g2);
  QVector v2 = random_qvector(rng, n2);
  QVector joined(dim + n2);
  for (int t = 0; t < dim; ++t) joined[t] = u[t];
  for (int t = 0; t < n2; ++t) joined[dim + t] = v2[t];
  L2Vector lhs = merged.apply(joined);
  QVector rhs = g1.g * u + g2.g * v2;
  if (!close(lhs.values, rhs, 1e-10)) return fail(note, "summed action");

  // a dual of the sum built from cross-kernel blocks splits exactly
  const int cap = std::max(1, max_dim - 1);
  const int sn1 = draw_dim(rng, 1, cap);
  const int sn2 = draw_dim(rng, 1, cap);
  const int satoms =
      std::max(sn1, sn2) + 1 + static_cast<int>(rng.next() % 2u);
  SuperInstance ss = shared_support_super(rng, sn1, sn2, satoms);
  OperatorBundle b1 = build_bundle(ss.sf.f1);
  OperatorBundle b2 = build_bundle(ss.sf.f2);
  QMatrix nz1 = nullspace(b1.preframe);
  QMatrix nz2 = nullspace(b2.preframe);
  if (nz1.cols() == 0 || nz2.cols() == 0) {
    return fail(note, "kernel setup");
  }
  QMatrix g1s = nz2 * random_matrix(rng, nz2.cols(), sn1);
  QMatrix g2s = nz1 * random_matrix(rng, nz1.cols(), sn2);
  QMatrix k1s = b1.preframe * g1s;
  QMatrix k2s = b2.preframe * g2s;
  SplitDualReport split = split_super_dual(
      ss.sf, k1s, k2s, DualMapping(ss.sf.f1.space, g1s),
      DualMapping(ss.sf.f2.space, g2s));
  if (!split.verdict) return fail(note, "split dual");

  // merged duals work exactly when the cross products vanish
  SuperInstance dj = disjoint_support_super(rng, sn1, sn2, sn1 + 1, sn2 + 1);
  DualMapping dg1 = kdual_via_douglas(dj.sf.f1, dj.k1);
  DualMapping dg2 = kdual_via_douglas(dj.sf.f2, dj.k2);
  CrossAnnihilationReport ca =
      cross_annihilation_equivalence(dj.sf, dj.k1, dj.k2, dg1, dg2);
  if (!ca.equivalence_agrees) return fail(note, "cross equivalence");
  if (!ca.merged || !ca.annihilation) return fail(note, "disjoint merge");

  DualMapping sg1 = kdual_via_douglas(ss.sf.f1, ss.k1);
  DualMapping sg2 = kdual_via_douglas(ss.sf.f2, ss.k2);
  CrossAnnihilationReport ca2 =
      cross_annihilation_equivalence(ss.sf, ss.k1, ss.k2, sg1, sg2);
  if (!ca2.equivalence_agrees) return fail(note, "generic cross equivalence");
  if (ca2.merged || ca2.annihilation) {
    return fail(note, "generic families must not merge");
  }

  // on a minimal family the K-dual is unique
  const int um = draw_dim(rng, 1, dim);
  FrameFamily mf = random_bessel_family(rng, dim, um);
  if (!is_minimal(mf)) return fail(note, "minimal family setup");
  OperatorBundle mb = build_bundle(mf);
  QMatrix mk = mb.synthesis_whitened * well_conditioned_matrix(rng, um, dim);
  DualMapping md = kdual_via_douglas(mf, mk);
  QMatrix direct = pinv(mb.preframe) * mk;
  if (!is_kdual(mf, mk, DualMapping(mf.space, direct)).ok) {
    return fail(note, "direct dual");
  }
  if (opnorm(md.g - direct) > 1e-8 * std::max(1.0, opnorm(direct))) {
    return fail(note, "dual uniqueness");
  }
  return true;
}

using TrialFn = bool (*)(SplitMix64&, int, double, std::string&);

struct Suite {
  const char* name;
  TrialFn fn;
};

constexpr Suite kSuites[] = {
    {"qcore", trial_qcore},           {"qlinalg", trial_qlinalg},
    {"energy", trial_energy},       {"parseval", trial_parseval},
    {"douglas", trial_douglas},       {"kframe", trial_kframe},
    {"superop", trial_superop},       {"obstruction", trial_obstruction},
    {"sufficiency", trial_sufficiency}, {"duality", trial_duality},
};

}  // namespace

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : kSuites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

TheoremResult run_theorem(const std::string& name, std::uint64_t seed,
                          int trials, int max_dim, double tol) {
  TrialFn fn = nullptr;
  for (const Suite& s : kSuites) {
    if (name == s.name) fn = s.fn;
  }
  if (fn == nullptr) {
    throw PreconditionError("run_theorem: unknown theorem '" + name + "'");
  }
  TheoremResult out;
  out.name = name;
  out.trials = trials;
  const int dim_cap = std::max(1, max_dim);
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed =
        derive_seed(seed, static_cast<std::uint64_t>(t));
    SplitMix64 rng(trial_seed);
    std::string trial_note;
    bool ok = false;
    try {
      ok = fn(rng, dim_cap, tol, trial_note);
    } catch (const Error& e) {
      trial_note = e.what();
    }
    if (ok) {
      ++out.passes;
    } else if (!out.has_failure) {
      out.has_failure = true;
      out.first_failure_seed = trial_seed;
      out.note = trial_note;
    }
  }
  return out;
}

}  // namespace qframes
