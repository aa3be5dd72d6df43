#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qframes/errors.hpp"
#include "qframes/quaternion.hpp"

namespace qframes {

/// Column vector in H^n.  Scalars act on the right: (u*q)_i = u_i*q, so the
/// span conventions of a right module are preserved everywhere downstream.
class QVector {
 public:
  QVector() = default;
  explicit QVector(int dim) : entries_(static_cast<std::size_t>(dim)) {}
  QVector(std::initializer_list<Quaternion> entries) : entries_(entries) {}
  explicit QVector(std::vector<Quaternion> entries)
      : entries_(std::move(entries)) {}

  static QVector basis(int dim, int index) {
    QVector e(dim);
    e[index] = Quaternion::one();
    return e;
  }

  int dim() const { return static_cast<int>(entries_.size()); }

  Quaternion& operator[](int i) { return entries_[static_cast<std::size_t>(i)]; }
  const Quaternion& operator[](int i) const {
    return entries_[static_cast<std::size_t>(i)];
  }

  const std::vector<Quaternion>& entries() const { return entries_; }

  QVector& operator+=(const QVector& v) {
    check_dim(v);
    for (int i = 0; i < dim(); ++i) entries_[i] += v[i];
    return *this;
  }
  QVector& operator-=(const QVector& v) {
    check_dim(v);
    for (int i = 0; i < dim(); ++i) entries_[i] -= v[i];
    return *this;
  }

  friend QVector operator+(QVector u, const QVector& v) { return u += v; }
  friend QVector operator-(QVector u, const QVector& v) { return u -= v; }
  QVector operator-() const {
    QVector r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = -entries_[i];
    return r;
  }

  // Right scalar multiplication.
  friend QVector operator*(const QVector& u, const Quaternion& q) {
    QVector r(u.dim());
    for (int i = 0; i < u.dim(); ++i) r[i] = u[i] * q;
    return r;
  }
  friend QVector operator*(const QVector& u, double s) {
    QVector r(u.dim());
    for (int i = 0; i < u.dim(); ++i) r[i] = u[i] * s;
    return r;
  }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& e : entries_) s += e.norm_sq();
    return s;
  }
  double norm() const { return std::sqrt(norm_sq()); }

  QVector normalized() const {
    const double n = norm();
    if (n == 0.0) throw ZeroDivisorError("cannot normalize the zero vector");
    return *this * (1.0 / n);
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

 private:
  void check_dim(const QVector& v) const {
    if (v.dim() != dim()) throw DimensionError("vector dimension mismatch");
  }

  std::vector<Quaternion> entries_;
};

/// Hermitian inner product <u|v> = sum_i conj(u_i) v_i: conjugate-linear in
/// the first slot, right-linear in the second.
inline Quaternion inner(const QVector& u, const QVector& v) {
  if (u.dim() != v.dim())
    throw DimensionError("inner: vector dimension mismatch");
  Quaternion s;
  for (int i = 0; i < u.dim(); ++i) s += u[i].conj() * v[i];
  return s;
}

inline bool close(const QVector& u, const QVector& v, double tol = 1e-12) {
  if (u.dim() != v.dim()) return false;
  for (int i = 0; i < u.dim(); ++i)
    if (!close(u[i], v[i], tol)) return false;
  return true;
}

}  // namespace qframes
