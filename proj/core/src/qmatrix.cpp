#include "qframes/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace qframes {

QMatrix::QMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion::one();
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  if (columns.empty()) return QMatrix();
  const int rows = columns.front().dim();
  QMatrix m(rows, static_cast<int>(columns.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (columns[static_cast<std::size_t>(j)].dim() != rows)
      throw DimensionError("from_columns: ragged column heights");
    for (int i = 0; i < rows; ++i) m(i, j) = columns[static_cast<std::size_t>(j)][i];
  }
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<double>& values) {
  QMatrix m(static_cast<int>(values.size()), static_cast<int>(values.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = Quaternion(values[static_cast<std::size_t>(i)]);
  return m;
}

QVector QMatrix::column(int j) const {
  QVector c(rows_);
  for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QVector QMatrix::row_entries(int i) const {
  QVector r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

QMatrix QMatrix::adjoint() const {
  QMatrix a(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) a(j, i) = (*this)(i, j).conj();
  return a;
}

QMatrix& QMatrix::operator+=(const QMatrix& m) {
  if (m.rows_ != rows_ || m.cols_ != cols_)
    throw DimensionError("matrix addition shape mismatch");
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += m.data_[t];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& m) {
  if (m.rows_ != rows_ || m.cols_ != cols_)
    throw DimensionError("matrix subtraction shape mismatch");
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= m.data_[t];
  return *this;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = -data_[t];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product inner dimension mismatch");
  QMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const Quaternion& ail = a(i, l);
      if (ail.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += ail * b(l, j);
    }
  return r;
}

QVector QMatrix::operator*(const QVector& u) const {
  if (u.dim() != cols_)
    throw DimensionError("matrix-vector dimension mismatch");
  QVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Quaternion s;
    for (int j = 0; j < cols_; ++j) s += (*this)(i, j) * u[j];
    r[i] = s;
  }
  return r;
}

QMatrix operator*(const QMatrix& m, double s) {
  QMatrix r(m.rows_, m.cols_);
  for (std::size_t t = 0; t < m.data_.size(); ++t) r.data_[t] = m.data_[t] * s;
  return r;
}

QMatrix QMatrix::scaled_right(const Quaternion& q) const {
  QMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < data_.size(); ++t) r.data_[t] = data_[t] * q;
  return r;
}

QMatrix QMatrix::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw DimensionError("block out of range");
  QMatrix b(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
  return b;
}

QMatrix QMatrix::hcat(const QMatrix& left, const QMatrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hcat row mismatch");
  QMatrix m(left.rows(), left.cols() + right.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
    for (int j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
  }
  return m;
}

QMatrix QMatrix::vcat(const QMatrix& top, const QMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionError("vcat column mismatch");
  QMatrix m(top.rows() + bottom.rows(), top.cols());
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < top.rows(); ++i) m(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i) m(top.rows() + i, j) = bottom(i, j);
  }
  return m;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : data_) s += q.norm_sq();
  return std::sqrt(s);
}

double QMatrix::max_abs_entry() const {
  double m = 0.0;
  for (const auto& q : data_) m = std::max(m, q.abs());
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& q : data_)
    if (!q.is_zero()) return false;
  return true;
}

QMatrix adjoint(const QMatrix& m) { return m.adjoint(); }

bool close(const QMatrix& a, const QMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!close(a(i, j), b(i, j), tol)) return false;
  return true;
}

}  // namespace qframes
