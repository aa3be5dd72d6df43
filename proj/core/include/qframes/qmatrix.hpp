#pragma once

#include <vector>

#include "qframes/qvector.hpp"
#include "qframes/quaternion.hpp"

namespace qframes {

/// Right H-linear operator as a quaternionic matrix acting on the left:
/// (Mu)_i = sum_j M_ij u_j.  Row-major storage.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols);

  static QMatrix identity(int n);
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
  static QMatrix from_columns(const std::vector<QVector>& columns);
  static QMatrix diagonal(const std::vector<double>& values);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Quaternion& operator()(int i, int j) { return data_[index(i, j)]; }
  const Quaternion& operator()(int i, int j) const { return data_[index(i, j)]; }

  QVector column(int j) const;
  QVector row_entries(int i) const;

  QMatrix adjoint() const;  // conjugate transpose

  QMatrix& operator+=(const QMatrix& m);
  QMatrix& operator-=(const QMatrix& m);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  QMatrix operator-() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  QVector operator*(const QVector& u) const;
  friend QMatrix operator*(const QMatrix& m, double s);
  friend QMatrix operator*(double s, const QMatrix& m) { return m * s; }

  // Entrywise right scalar multiple: (M q)(u) = sum_j M_ij q u_j.
  QMatrix scaled_right(const Quaternion& q) const;

  QMatrix block(int row0, int col0, int nrows, int ncols) const;
  static QMatrix hcat(const QMatrix& left, const QMatrix& right);
  static QMatrix vcat(const QMatrix& top, const QMatrix& bottom);

  double frobenius_norm() const;
  double max_abs_entry() const;
  bool is_zero() const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Quaternion> data_;
};

QMatrix adjoint(const QMatrix& m);

/// Entrywise closeness with absolute tolerance.
bool close(const QMatrix& a, const QMatrix& b, double tol = 1e-12);

}  // namespace qframes
