#pragma once

#include <Eigen/Core>
#include <complex>

#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Complex image of a k x n quaternionic matrix under the symplectic
/// representation: each entry q = alpha + beta*j (alpha, beta in span{1,i})
/// maps to the 2x2 block [[alpha, beta], [-conj(beta), conj(alpha)]].
///
/// The map is a structure-preserving isomorphism onto its image:
/// chi(AB) = chi(A) chi(B), chi(A+B) = chi(A)+chi(B), chi(A*) = chi(A)^H,
/// and vectors embed isometrically, so operator norms and Hermitian spectra
/// of the image match the quaternionic originals (with doubled multiplicity).
struct ComplexEmbedding {
  Eigen::MatrixXcd mat;  // 2*qrows x 2*qcols
  int qrows = 0;
  int qcols = 0;
};

ComplexEmbedding embed(const QMatrix& m);

/// Inverse of embed.  Rejects matrices violating the block pattern beyond
/// `pattern_tol` (relative to the largest entry).
QMatrix unembed(const ComplexEmbedding& c, double pattern_tol = 1e-10);

/// Isometric vector embedding compatible with embed:
/// chi(M) * embed_vector(u) = embed_vector(M u) and norms are preserved.
Eigen::VectorXcd embed_vector(const QVector& u);
QVector unembed_vector(const Eigen::VectorXcd& z);

}  // namespace qframes
