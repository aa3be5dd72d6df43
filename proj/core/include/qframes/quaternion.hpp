#pragma once

#include <cmath>

#include "qframes/errors.hpp"

namespace qframes {

/// One element of the non-commutative field H, stored as the four real
/// coefficients of 1, i, j, k.  Multiplication follows the Hamilton table
/// i^2 = j^2 = k^2 = -1, ij = -ji = k, jk = -kj = i, ki = -ik = j.
struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : a0(r) {}
  constexpr Quaternion(double r, double i, double j, double k)
      : a0(r), a1(i), a2(j), a3(k) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion conj() const { return {a0, -a1, -a2, -a3}; }

  constexpr double norm_sq() const {
    return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3;
  }
  double abs() const { return std::sqrt(norm_sq()); }

  constexpr bool is_zero() const {
    return a0 == 0.0 && a1 == 0.0 && a2 == 0.0 && a3 == 0.0;
  }

  Quaternion inverse() const {
    const double n2 = norm_sq();
    if (n2 == 0.0) throw ZeroDivisorError("cannot invert the zero quaternion");
    return {a0 / n2, -a1 / n2, -a2 / n2, -a3 / n2};
  }

  constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }

  constexpr Quaternion& operator+=(const Quaternion& q) {
    a0 += q.a0;
    a1 += q.a1;
    a2 += q.a2;
    a3 += q.a3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    a0 -= q.a0;
    a1 -= q.a1;
    a2 -= q.a2;
    a3 -= q.a3;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion p, const Quaternion& q) {
    return p += q;
  }
  friend constexpr Quaternion operator-(Quaternion p, const Quaternion& q) {
    return p -= q;
  }

  // Hamilton product; not commutative.
  friend constexpr Quaternion operator*(const Quaternion& p,
                                        const Quaternion& q) {
    return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
            p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
            p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
            p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0};
  }

  friend constexpr Quaternion operator*(const Quaternion& q, double s) {
    return {q.a0 * s, q.a1 * s, q.a2 * s, q.a3 * s};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) {
    return q * s;
  }
  friend Quaternion operator/(const Quaternion& q, double s) {
    return {q.a0 / s, q.a1 / s, q.a2 / s, q.a3 / s};
  }

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;
};

inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline double abs(const Quaternion& q) { return q.abs(); }

/// Componentwise comparison with absolute tolerance (the uniform test
/// contract for scalar results).
inline bool close(const Quaternion& p, const Quaternion& q,
                  double tol = 1e-12) {
  return std::fabs(p.a0 - q.a0) <= tol && std::fabs(p.a1 - q.a1) <= tol &&
         std::fabs(p.a2 - q.a2) <= tol && std::fabs(p.a3 - q.a3) <= tol;
}

}  // namespace qframes
