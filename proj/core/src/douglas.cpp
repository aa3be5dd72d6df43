#include "qframes/douglas.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qframes/embedding.hpp"
#include "qframes/errors.hpp"

namespace qframes {

QMatrix douglas_factor(const QMatrix& l, const QMatrix& m, double tol) {
  if (l.rows() != m.rows()) {
    throw DimensionError("douglas_factor: L and M must share their codomain");
  }
  QMatrix x = pinv(m) * l;
  const double residual = opnorm(m * x - l);
  if (residual > tol * std::max(1.0, opnorm(l))) {
    throw FactorizationError(
        "douglas_factor: no exact factorization (residual " +
            std::to_string(residual) + ")",
        residual);
  }
  return x;
}

double min_majorization_constant(const QMatrix& l, const QMatrix& m,
                                 double tol) {
  if (l.rows() != m.rows()) {
    throw DimensionError(
        "min_majorization_constant: L and M must share their codomain");
  }
  RangeInclusion ri = range_inclusion(l, m, tol);
  if (!ri.included) {
    throw InfeasibleError(
        "min_majorization_constant: range of L escapes range of M (residual " +
        std::to_string(ri.residual) + ")");
  }
  const double x_norm = opnorm(pinv(m) * l);
  return x_norm * x_norm;
}

MajorizationCertificate majorization_certificate(const QMatrix& l,
                                                 const QMatrix& m, double c) {
  if (l.rows() != m.rows()) {
    throw DimensionError(
        "majorization_certificate: L and M must share their codomain");
  }
  QMatrix mm = m * adjoint(m);
  QMatrix diff = mm * c - l * adjoint(l);
  diff = (diff + adjoint(diff)) * 0.5;  // scrub rounding asymmetry
  MajorizationCertificate cert;
  std::vector<double> ev = herm_eigvals(diff);
  if (ev.empty()) {
    cert.holds = true;
    return cert;
  }
  cert.min_eigenvalue = ev.front();
  // The slack is pinned to the size of MM*, not of the difference: at the
  // optimal c the difference itself is numerically zero.
  cert.holds = cert.min_eigenvalue >= -1e-8 * std::max(1.0, opnorm(mm));
  return cert;
}

DouglasReport douglas_equivalence_report(const QMatrix& l, const QMatrix& m,
                                         double tol) {
  if (l.rows() != m.rows()) {
    throw DimensionError(
        "douglas_equivalence_report: L and M must share their codomain");
  }
  DouglasReport rep;
  const double l_scale = std::max(1.0, opnorm(l));

  RangeInclusion ri = range_inclusion(l, m, tol);
  rep.range_included = ri.included;
  rep.range_residual = ri.residual;

  // ker(M*) must annihilate L*; when it does, the certificate at c_min
  // closes the loop.
  QMatrix coker = nullspace(adjoint(m));
  double annihilation = coker.cols() > 0 ? opnorm(adjoint(l) * coker) : 0.0;
  if (annihilation <= tol * l_scale) {
    rep.c_min = std::pow(opnorm(pinv(m) * l), 2);
    MajorizationCertificate cert = majorization_certificate(l, m, rep.c_min);
    rep.certificate_eigenvalue = cert.min_eigenvalue;
    rep.majorized = cert.holds;
  } else {
    rep.majorized = false;
    rep.c_min = std::numeric_limits<double>::infinity();
    rep.certificate_eigenvalue = -annihilation;
  }

  // independent least-squares solve on the embedded system
  ComplexEmbedding me = embed(m);
  ComplexEmbedding le = embed(l);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      me.mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::MatrixXcd xc = svd.solve(le.mat);
  ComplexEmbedding xe;
  xe.mat = std::move(xc);
  xe.qrows = m.cols();
  xe.qcols = l.cols();
  QMatrix x = unembed(xe);
  rep.factor_residual = opnorm(m * x - l);
  rep.factorizable = rep.factor_residual <= tol * l_scale;
  rep.factor = std::move(x);
  rep.factor_norm = opnorm(rep.factor);
  return rep;
}

}  // namespace qframes
