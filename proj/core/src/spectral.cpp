#include "qframes/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "qframes/embedding.hpp"
#include "qframes/errors.hpp"

namespace qframes {

namespace {

// Embedded spectra of structured matrices come in coincident pairs; collapse
// them, complaining if the pairing is broken (which would mean the input was
// not actually structure-preserving).
std::vector<double> collapse_pairs(const std::vector<double>& vals,
                                   const char* what) {
  if (vals.size() % 2 != 0) {
    throw PairingError(std::string(what) + ": odd embedded spectrum length");
  }
  double scale = 1.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  const double ptol = 1e-9 * scale;
  std::vector<double> out;
  out.reserve(vals.size() / 2);
  for (std::size_t t = 0; t + 1 < vals.size(); t += 2) {
    if (std::abs(vals[t] - vals[t + 1]) > ptol) {
      throw PairingError(std::string(what) + ": embedded spectrum not paired (" +
                         std::to_string(vals[t]) + " vs " +
                         std::to_string(vals[t + 1]) + ")");
    }
    out.push_back(0.5 * (vals[t] + vals[t + 1]));
  }
  return out;
}

Eigen::JacobiSVD<Eigen::MatrixXcd> full_svd(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

}  // namespace

double rank_threshold(const QMatrix& m, double sigma_max) {
  return std::max(m.rows(), m.cols()) * 1e-12 * sigma_max;
}

double opnorm(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  ComplexEmbedding e = embed(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e.mat);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

std::vector<double> singular_values(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  ComplexEmbedding e = embed(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e.mat);
  std::vector<double> raw(svd.singularValues().data(),
                          svd.singularValues().data() +
                              svd.singularValues().size());
  return collapse_pairs(raw, "singular_values");  // already descending
}

int rank(const QMatrix& m) {
  std::vector<double> sv = singular_values(m);
  if (sv.empty()) return 0;
  const double thr = rank_threshold(m, sv.front());
  int r = 0;
  for (double s : sv) {
    if (s > thr) ++r;
  }
  return r;
}

QMatrix pinv(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return QMatrix(m.cols(), m.rows());
  ComplexEmbedding e = embed(m);
  auto svd = full_svd(e.mat);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = rank_threshold(m, sigma_max);
  Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index t = 0; t < sv.size(); ++t) {
    if (sv(t) > thr) inv_sv(t) = 1.0 / sv(t);
  }
  Eigen::MatrixXcd p = svd.matrixV().leftCols(sv.size()) *
                       inv_sv.asDiagonal() *
                       svd.matrixU().leftCols(sv.size()).adjoint();
  ComplexEmbedding pe;
  pe.mat = std::move(p);
  pe.qrows = m.cols();
  pe.qcols = m.rows();
  return unembed(pe);
}

bool is_hermitian(const QMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  QMatrix diff = m - adjoint(m);
  return diff.max_abs_entry() <= tol * std::max(1.0, m.max_abs_entry());
}

std::vector<double> herm_eigvals(const QMatrix& m) {
  if (!is_hermitian(m)) {
    throw NotHermitianError("herm_eigvals: input is not Hermitian");
  }
  if (m.rows() == 0) return {};
  ComplexEmbedding e = embed(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e.mat,
                                                     Eigen::EigenvaluesOnly);
  std::vector<double> raw(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  return collapse_pairs(raw, "herm_eigvals");  // ascending from Eigen
}

HermEig herm_eig(const QMatrix& m) {
  if (!is_hermitian(m)) {
    throw NotHermitianError("herm_eig: input is not Hermitian");
  }
  HermEig out;
  if (m.rows() == 0) return out;
  ComplexEmbedding e = embed(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e.mat);
  std::vector<double> raw(es.eigenvalues().data(),
                          es.eigenvalues().data() + es.eigenvalues().size());
  out.eigenvalues = collapse_pairs(raw, "herm_eig");
  for (std::size_t t = 0; t < out.eigenvalues.size(); ++t) {
    QVector v = unembed_vector(es.eigenvectors().col(2 * t));
    out.eigenvectors.push_back(v.normalized());
  }
  return out;
}

QMatrix herm_sqrt(const QMatrix& m) {
  if (!is_hermitian(m)) {
    throw NotHermitianError("herm_sqrt: input is not Hermitian");
  }
  if (m.rows() == 0) return m;
  ComplexEmbedding e = embed(m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e.mat);
  const auto& ev = es.eigenvalues();
  const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  if (ev(0) < -1e-8 * scale) {
    throw PreconditionError("herm_sqrt: input is not positive semidefinite (min eigenvalue " +
                            std::to_string(ev(0)) + ")");
  }
  // The embedded spectrum comes in coincident pairs that rounding splits
  // into (lambda - eps, lambda + eps).  Rooting the copies independently
  // would leave an unpaired sqrt(eps) term that breaks the block pattern,
  // so average each pair and clip noise-level values before rooting.
  Eigen::VectorXd root = Eigen::VectorXd::Zero(ev.size());
  const double clip = 1e-12 * scale;
  for (Eigen::Index t = 0; t + 1 < ev.size(); t += 2) {
    const double avg = 0.5 * (ev(t) + ev(t + 1));
    const double r = avg > clip ? std::sqrt(avg) : 0.0;
    root(t) = r;
    root(t + 1) = r;
  }
  ComplexEmbedding se;
  se.mat = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  se.qrows = m.rows();
  se.qcols = m.cols();
  return unembed(se);
}

bool is_psd(const QMatrix& m) {
  std::vector<double> ev = herm_eigvals(m);
  if (ev.empty()) return true;
  double scale = 0.0;
  for (double v : ev) scale = std::max(scale, std::abs(v));
  return ev.front() >= -1e-10 * scale;
}

RangeInclusion range_inclusion(const QMatrix& l, const QMatrix& m,
                               double tol) {
  if (l.rows() != m.rows()) {
    throw DimensionError("range_inclusion: row counts differ");
  }
  RangeInclusion out;
  QMatrix projected = m * (pinv(m) * l);
  out.residual = opnorm(l - projected);
  out.included = out.residual <= tol * std::max(1.0, opnorm(l));
  return out;
}

QMatrix nullspace(const QMatrix& m) {
  if (m.cols() == 0) return QMatrix(0, 0);
  if (m.rows() == 0) return QMatrix::identity(m.cols());
  ComplexEmbedding e = embed(m);
  auto svd = full_svd(e.mat);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double thr = rank_threshold(m, sigma_max);
  std::vector<QVector> cols;
  for (Eigen::Index t = 0; t < svd.matrixV().cols(); ++t) {
    if (t < sv.size() && sv(t) > thr) continue;
    cols.push_back(unembed_vector(svd.matrixV().col(t)));
  }
  if (cols.empty()) return QMatrix(m.cols(), 0);
  return QMatrix::from_columns(cols);
}

std::vector<QVector> orthonormal_basis(int n) {
  std::vector<QVector> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) basis.push_back(QVector::basis(n, t));
  return basis;
}

std::vector<QVector> gram_schmidt(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return {};
  if (rank(QMatrix::from_columns(vectors)) !=
      static_cast<int>(vectors.size())) {
    throw PreconditionError("gram_schmidt: input is right-linearly dependent");
  }
  std::vector<QVector> basis;
  basis.reserve(vectors.size());
  for (const QVector& v : vectors) {
    QVector w = v;
    // two projection passes keep the residual orthogonal to working precision
    for (int pass = 0; pass < 2; ++pass) {
      for (const QVector& z : basis) w = w - z * inner(z, w);
    }
    basis.push_back(w.normalized());
  }
  return basis;
}

}  // namespace qframes
