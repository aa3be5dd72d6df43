#include "qframes/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "qframes/errors.hpp"

namespace qframes {

namespace {

using Cx = std::complex<double>;

}  // namespace

ComplexEmbedding embed(const QMatrix& m) {
  ComplexEmbedding c;
  c.qrows = m.rows();
  c.qcols = m.cols();
  c.mat.resize(2 * m.rows(), 2 * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      const Quaternion& q = m(i, j);
      const Cx alpha(q.a0, q.a1);
      const Cx beta(q.a2, q.a3);
      c.mat(2 * i, 2 * j) = alpha;
      c.mat(2 * i, 2 * j + 1) = beta;
      c.mat(2 * i + 1, 2 * j) = -std::conj(beta);
      c.mat(2 * i + 1, 2 * j + 1) = std::conj(alpha);
    }
  }
  return c;
}

QMatrix unembed(const ComplexEmbedding& c, double pattern_tol) {
  if (c.mat.rows() != 2 * c.qrows || c.mat.cols() != 2 * c.qcols)
    throw DimensionError("unembed: matrix size does not match block counts");
  const double scale = std::max(1.0, c.mat.cwiseAbs().maxCoeff());
  QMatrix m(c.qrows, c.qcols);
  for (int i = 0; i < c.qrows; ++i) {
    for (int j = 0; j < c.qcols; ++j) {
      const Cx alpha = c.mat(2 * i, 2 * j);
      const Cx beta = c.mat(2 * i, 2 * j + 1);
      const Cx gamma = c.mat(2 * i + 1, 2 * j);
      const Cx delta = c.mat(2 * i + 1, 2 * j + 1);
      if (std::abs(delta - std::conj(alpha)) > pattern_tol * scale ||
          std::abs(gamma + std::conj(beta)) > pattern_tol * scale)
        throw EmbeddingPatternError("unembed: block symmetry pattern violated");
      // Average the redundant copies so rounding noise cancels.
      const Cx a = 0.5 * (alpha + std::conj(delta));
      const Cx b = 0.5 * (beta - std::conj(gamma));
      m(i, j) = Quaternion(a.real(), a.imag(), b.real(), b.imag());
    }
  }
  return m;
}

Eigen::VectorXcd embed_vector(const QVector& u) {
  Eigen::VectorXcd z(2 * u.dim());
  for (int i = 0; i < u.dim(); ++i) {
    const Quaternion& q = u[i];
    z(2 * i) = Cx(q.a0, q.a1);
    z(2 * i + 1) = Cx(-q.a2, q.a3);  // -conj(beta) with beta = a2 + a3 i
  }
  return z;
}

QVector unembed_vector(const Eigen::VectorXcd& z) {
  if (z.size() % 2 != 0)
    throw DimensionError("unembed_vector: odd length");
  QVector u(static_cast<int>(z.size() / 2));
  for (int i = 0; i < u.dim(); ++i) {
    const Cx alpha = z(2 * i);
    const Cx mcb = z(2 * i + 1);  // -conj(beta)
    u[i] = Quaternion(alpha.real(), alpha.imag(), -mcb.real(), mcb.imag());
  }
  return u;
}

}  // namespace qframes
