#pragma once

#include <vector>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

inline constexpr double kDefaultTol = 1e-9;

/// Numerical-rank threshold: sigma_i > max(rows, cols) * 1e-12 * sigma_max.
double rank_threshold(const QMatrix& m, double sigma_max);

/// Operator norm = largest singular value of the complex embedding.
double opnorm(const QMatrix& m);

/// Singular values deduplicated from the paired embedded spectrum,
/// descending; min(rows, cols) values.
std::vector<double> singular_values(const QMatrix& m);

int rank(const QMatrix& m);

/// Moore-Penrose pseudoinverse via SVD of the embedding.
QMatrix pinv(const QMatrix& m);

bool is_hermitian(const QMatrix& m, double tol = 1e-10);

/// Eigenvalues of a Hermitian operator, ascending; the embedded spectrum is
/// verified to appear with even multiplicities and deduplicated by pairing
/// (n values for an n x n input).
std::vector<double> herm_eigvals(const QMatrix& m);

struct HermEig {
  std::vector<double> eigenvalues;    // ascending, deduplicated
  std::vector<QVector> eigenvectors;  // one unit eigenvector per eigenvalue
};
HermEig herm_eig(const QMatrix& m);

/// Positive semidefinite square root; eigenvalue rounding below
/// 1e-12 * ||m|| is clipped at zero.
QMatrix herm_sqrt(const QMatrix& m);

/// M >= 0 iff herm_eigvals(M) >= -1e-10 * ||M||.
bool is_psd(const QMatrix& m);

struct RangeInclusion {
  bool included = false;
  double residual = 0.0;
};

/// R(L) subset of R(M), decided by ||(I - M pinv(M)) L|| <= tol * max(1, ||L||).
RangeInclusion range_inclusion(const QMatrix& l, const QMatrix& m,
                               double tol = kDefaultTol);

/// Columns right-H-span the kernel of m (possibly redundantly: one column
/// per embedded null direction).  Zero-column matrix when m is injective.
QMatrix nullspace(const QMatrix& m);

std::vector<QVector> orthonormal_basis(int n);

/// Right-module Gram-Schmidt; projection coefficients multiply on the right.
/// Throws PreconditionError for right-H-linearly dependent input.
std::vector<QVector> gram_schmidt(const std::vector<QVector>& vectors);

}  // namespace qframes
