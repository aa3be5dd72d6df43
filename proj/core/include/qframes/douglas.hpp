#pragma once

#include "qframes/qmatrix.hpp"
#include "qframes/spectral.hpp"

namespace qframes {

/// Minimal solution X of L = M X (columns orthogonal to ker(M), smallest
/// operator norm among all solutions).  Throws FactorizationError carrying
/// the residual when no exact solution exists at the given tolerance.
QMatrix douglas_factor(const QMatrix& l, const QMatrix& m,
                       double tol = kDefaultTol);

/// Smallest c >= 0 with L L* <= c M M*.  Equals ||X||^2 for the minimal
/// factor; 0 when L = 0.  Throws InfeasibleError when no finite c exists.
double min_majorization_constant(const QMatrix& l, const QMatrix& m,
                                 double tol = kDefaultTol);

struct MajorizationCertificate {
  double min_eigenvalue = 0.0;  // of c M M* - L L*
  bool holds = false;
};

/// Direct spectral test of L L* <= c M M*.
MajorizationCertificate majorization_certificate(const QMatrix& l,
                                                 const QMatrix& m, double c);

/// The three equivalent conditions, each decided by its own computation:
/// range inclusion via the orthogonal projector onto R(M), majorization via
/// annihilation of ker(M*) plus a spectral certificate at c_min, and
/// factorizability via a least-squares solve.
struct DouglasReport {
  bool range_included = false;
  double range_residual = 0.0;

  bool majorized = false;
  double c_min = 0.0;            // meaningful when majorized
  double certificate_eigenvalue = 0.0;

  bool factorizable = false;
  double factor_residual = 0.0;
  QMatrix factor;                // least-squares X, meaningful when factorizable
  double factor_norm = 0.0;
};

DouglasReport douglas_equivalence_report(const QMatrix& l, const QMatrix& m,
                                         double tol = kDefaultTol);

}  // namespace qframes
