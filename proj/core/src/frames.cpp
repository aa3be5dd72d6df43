#include "qframes/frames.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "qframes/embedding.hpp"
#include "qframes/errors.hpp"
#include "qframes/random.hpp"
#include "qframes/spectral.hpp"

namespace qframes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double qform(const QMatrix& s, const QVector& u) { return inner(u, s * u).a0; }

// spectral test of S - c K K^* >= 0; slack is relative to ||S|| so the
// rounding left behind by the sqrt/pinv chain cannot flip the verdict
struct LowerCertificate {
  double min_eigenvalue = 0.0;
  bool holds = false;
};

LowerCertificate lower_certificate(const QMatrix& s, const QMatrix& k,
                                   double c, double s_norm) {
  QMatrix diff = s - (k * adjoint(k)) * c;
  diff = (diff + adjoint(diff)) * 0.5;
  std::vector<double> ev = herm_eigvals(diff);
  LowerCertificate cert;
  if (ev.empty()) {
    cert.holds = true;
    return cert;
  }
  cert.min_eigenvalue = ev.front();
  cert.holds = cert.min_eigenvalue >= -1e-8 * std::max(1.0, s_norm);
  return cert;
}

}  // namespace

FrameFamily::FrameFamily(DiscreteMeasureSpace s, std::vector<QVector> v, int n)
    : space(std::move(s)), vectors(std::move(v)), dim(n) {
  if (dim < 0) throw DimensionError("FrameFamily: negative dimension");
  if (static_cast<int>(vectors.size()) != space.size()) {
    throw DimensionError("FrameFamily: vector count must match atom count");
  }
  for (const QVector& f : vectors) {
    if (f.dim() != dim) {
      throw DimensionError("FrameFamily: all vectors must live in dimension " +
                           std::to_string(dim));
    }
  }
}

OperatorBundle build_bundle(const FrameFamily& fam) {
  const int m = fam.atoms();
  const int n = fam.dim;
  OperatorBundle b{QMatrix(m, n), QMatrix(n, m), QMatrix(n, n),
                   QMatrix(n, m)};
  for (int i = 0; i < m; ++i) {
    const QVector& f = fam.vectors[static_cast<std::size_t>(i)];
    const double mu = fam.space.weight(i);
    const double root = std::sqrt(mu);
    for (int j = 0; j < n; ++j) {
      b.theta(i, j) = conj(f[j]);
      b.preframe(j, i) = f[j] * mu;
      b.synthesis_whitened(j, i) = f[j] * root;
    }
  }
  b.frame_op = b.preframe * b.theta;
  return b;
}

QMatrix analysis_whitened(const OperatorBundle& bundle) {
  return adjoint(bundle.synthesis_whitened);
}

EnergyTriple frame_energy(const FrameFamily& fam, const QVector& u) {
  if (u.dim() != fam.dim) {
    throw DimensionError("frame_energy: vector dimension mismatch");
  }
  OperatorBundle b = build_bundle(fam);
  EnergyTriple e;
  for (int i = 0; i < fam.atoms(); ++i) {
    e.direct_sum +=
        fam.space.weight(i) *
        inner(fam.vectors[static_cast<std::size_t>(i)], u).norm_sq();
  }
  e.quadratic_form = qform(b.frame_op, u);
  e.analysis_norm_sq = l2_norm_sq(L2Vector(fam.space, b.theta * u));
  return e;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::NotBessel: return "not-bessel";
    case Classification::BesselOnly: return "bessel-only";
    case Classification::Frame: return "frame";
    case Classification::Parseval: return "parseval";
    case Classification::KFrame: return "k-frame";
  }
  return "unknown";
}

FrameBounds frame_bounds(const FrameFamily& fam) {
  OperatorBundle b = build_bundle(fam);
  FrameBounds out;
  std::vector<double> ev = herm_eigvals(b.frame_op);
  if (ev.empty()) return out;
  out.lower = ev.front();
  out.upper = ev.back();
  out.k_lower = out.lower;  // identity K
  const double thr = rank_threshold(b.frame_op, out.upper);
  const bool is_frame = out.lower > thr;
  const bool is_parseval = is_frame && std::abs(out.lower - 1.0) <= 1e-9 &&
                           std::abs(out.upper - 1.0) <= 1e-9;
  out.cls = is_parseval ? Classification::Parseval
            : is_frame  ? Classification::Frame
                        : Classification::BesselOnly;
  return out;
}

FrameBounds frame_bounds(const FrameFamily& fam, const QMatrix& k) {
  if (k.rows() != fam.dim || k.cols() != fam.dim) {
    throw DimensionError("frame_bounds: K must be square on the frame space");
  }
  FrameBounds out = frame_bounds(fam);
  OperatorBundle b = build_bundle(fam);
  if (k.is_zero()) {
    out.k_lower = kInf;
    return out;
  }
  QMatrix root = herm_sqrt(b.frame_op);
  const double x = opnorm(pinv(root) * k);
  if (x <= 0.0) {
    out.k_lower = 0.0;
    return out;
  }
  const double c = 1.0 / (x * x);
  if (lower_certificate(b.frame_op, k, c, out.upper).holds) {
    out.k_lower = c;
    if (out.cls == Classification::BesselOnly) out.cls = Classification::KFrame;
  } else {
    out.k_lower = 0.0;
  }
  return out;
}

KFrameReport kframe_check(const FrameFamily& fam, const QMatrix& k,
                          const KFrameOptions& opts) {
  if (k.rows() != fam.dim || k.cols() != fam.dim) {
    throw DimensionError("kframe_check: K must be square on the frame space");
  }
  OperatorBundle b = build_bundle(fam);
  const QMatrix& ts = b.synthesis_whitened;
  const QMatrix theta_w = analysis_whitened(b);
  const QMatrix& s = b.frame_op;
  const double k_norm = opnorm(k);
  const double k_scale = std::max(1.0, k_norm);

  KFrameReport rep;
  rep.bounds = frame_bounds(fam);

  if (k.is_zero()) {
    // every condition is vacuous or trivially satisfiable
    rep.c_opt = kInf;
    rep.bounds.k_lower = kInf;
    rep.sampled_min_ratio = kInf;
    rep.lower_bound = true;
    rep.range = true;
    rep.majorized = true;
    rep.factorization = true;
    rep.conditions_agree = true;
    rep.is_kframe = true;
    return rep;
  }

  // (i) sampled inequality; eigenvector directions of S catch kernel
  // escapes, columns of K catch range escapes, the rest is random
  HermEig se = herm_eig(s);
  {
    std::vector<QVector> dirs = se.eigenvectors;
    for (int j = 0; j < k.cols(); ++j) {
      QVector col = k.column(j);
      if (col.norm_sq() > 1e-20) dirs.push_back(col.normalized());
    }
    SplitMix64 rng(opts.seed);
    for (int t = 0; t < opts.samples; ++t) {
      dirs.push_back(random_unit_qvector(rng, fam.dim));
    }
    double min_ratio = kInf;
    const QMatrix k_adj = adjoint(k);
    for (const QVector& u : dirs) {
      const double denom = (k_adj * u).norm_sq();
      if (denom <= 1e-14 * k_norm * k_norm) continue;
      min_ratio = std::min(min_ratio, qform(s, u) / denom);
    }
    rep.sampled_min_ratio = min_ratio;
    rep.sampled_floor =
        1e-8 * (1.0 + rep.bounds.upper) / (1.0 + k_norm * k_norm);
    rep.lower_bound = min_ratio > rep.sampled_floor;
  }

  // (ii) range inclusion into the whitened synthesis
  RangeInclusion ri = range_inclusion(k, ts, opts.tol);
  rep.range = ri.included;
  rep.range_residual = ri.residual;

  // (iii) majorization: the analysis kernel must be annihilated by K^*,
  // and the optimal constant must certify spectrally
  {
    QMatrix kernel = nullspace(theta_w);
    rep.kernel_residual =
        kernel.cols() > 0 ? opnorm(adjoint(k) * kernel) : 0.0;
    const bool kernel_ok = rep.kernel_residual <= opts.tol * k_scale;

    QMatrix root = herm_sqrt(s);
    const double x = opnorm(pinv(root) * k);
    const double candidate = x > 0.0 ? 1.0 / (x * x) : 0.0;
    LowerCertificate cert =
        candidate > 0.0
            ? lower_certificate(s, k, candidate, rep.bounds.upper)
            : LowerCertificate{};
    rep.certificate_eigenvalue = cert.min_eigenvalue;
    rep.majorized = kernel_ok && candidate > 0.0 && cert.holds;
    rep.c_opt = rep.majorized ? candidate : 0.0;
    rep.bounds.k_lower = rep.c_opt;
    if (rep.majorized && rep.bounds.cls == Classification::BesselOnly) {
      rep.bounds.cls = Classification::KFrame;
    }
  }

  // (iv) least-squares factorization K = T~ X on the embedded system
  {
    ComplexEmbedding te = embed(ts);
    ComplexEmbedding ke = embed(k);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
        te.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::MatrixXcd xc = svd.solve(ke.mat);
    ComplexEmbedding xe;
    xe.mat = std::move(xc);
    xe.qrows = ts.cols();
    xe.qcols = k.cols();
    QMatrix x = unembed(xe);
    rep.factorization_residual = opnorm(ts * x - k);
    rep.factorization = rep.factorization_residual <= opts.tol * k_scale;
  }

  rep.conditions_agree = rep.lower_bound == rep.range &&
                         rep.range == rep.majorized &&
                         rep.majorized == rep.factorization;
  rep.is_kframe =
      rep.lower_bound && rep.range && rep.majorized && rep.factorization;
  return rep;
}

FrameFamily parseval_from_partition(const DiscreteMeasureSpace& space) {
  return parseval_from_partition(space, orthonormal_basis(space.size()));
}

FrameFamily parseval_from_partition(const DiscreteMeasureSpace& space,
                                    const std::vector<QVector>& basis) {
  const int m = space.size();
  if (static_cast<int>(basis.size()) != m) {
    throw DimensionError(
        "parseval_from_partition: need one basis vector per atom");
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Quaternion g = inner(basis[static_cast<std::size_t>(i)],
                           basis[static_cast<std::size_t>(j)]);
      Quaternion expect = i == j ? Quaternion::one() : Quaternion::zero();
      if (!close(g, expect, 1e-9)) {
        throw PreconditionError(
            "parseval_from_partition: basis is not orthonormal");
      }
    }
  }
  std::vector<QVector> vectors;
  vectors.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    vectors.push_back(basis[static_cast<std::size_t>(i)] *
                      (1.0 / std::sqrt(space.weight(i))));
  }
  return FrameFamily(space, std::move(vectors), m);
}

MinimalityReport minimality(const FrameFamily& fam) {
  OperatorBundle b = build_bundle(fam);
  MinimalityReport rep;
  rep.synthesis_rank = rank(b.synthesis_whitened);
  rep.minimal = rep.synthesis_rank == fam.atoms();
  rep.theta_injective = rank(analysis_whitened(b)) == fam.dim;
  rep.nonvanishing = true;
  for (const QVector& f : fam.vectors) {
    if (f.is_zero()) rep.nonvanishing = false;
  }
  return rep;
}

bool is_minimal(const FrameFamily& fam) { return minimality(fam).minimal; }

FrameFamily map_family(const QMatrix& m, const FrameFamily& fam) {
  if (m.cols() != fam.dim) {
    throw DimensionError("map_family: operator domain must match the family");
  }
  std::vector<QVector> mapped;
  mapped.reserve(fam.vectors.size());
  for (const QVector& f : fam.vectors) mapped.push_back(m * f);
  return FrameFamily(fam.space, std::move(mapped), m.rows());
}

}  // namespace qframes
