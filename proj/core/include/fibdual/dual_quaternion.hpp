#pragma once

#include <array>
#include <ostream>
#include <utility>

#include "fibdual/dual.hpp"
#include "fibdual/errors.hpp"
#include "fibdual/quaternion.hpp"

namespace fibdual {

// Dual quaternion Q = q + eps q* with quaternion parts over a commutative
// ring R. Eight R-components in total. The product keeps the order of the
// factors in the dual part:
//   Q.P = q.p + eps(q.p* + q*.p).
// The same algebra can be viewed as a quaternion whose components are dual
// numbers; transport()/untransport() move between the two representations
// and are ring isomorphisms.
template <typename R>
struct DualQuaternion {
  Quaternion<R> real{};
  Quaternion<R> dual{};

  DualQuaternion() = default;
  DualQuaternion(Quaternion<R> real_part, Quaternion<R> dual_part)
      : real(std::move(real_part)), dual(std::move(dual_part)) {}

  static DualQuaternion from_quat(Quaternion<R> q) {
    return DualQuaternion(std::move(q), Quaternion<R>{});
  }
  // Central embedding of a dual scalar a + eps b.
  static DualQuaternion from_dual_scalar(const Dual<R>& d) {
    return DualQuaternion(Quaternion<R>::scalar(d.re), Quaternion<R>::scalar(d.du));
  }

  DualQuaternion conjugate() const {
    return DualQuaternion(real.conjugate(), dual.conjugate());
  }

  // A^2 + B^2 + C^2 + D^2 over the dual numbers, where A..D are the four
  // dual components. Equals Q * conjugate(Q) read as a dual scalar.
  Dual<R> norm() const {
    Dual<R> a(real.w, dual.w), b(real.x, dual.x), c(real.y, dual.y), d(real.z, dual.z);
    return a * a + b * b + c * c + d * d;
  }

  DualQuaternion operator-() const { return DualQuaternion(-real, -dual); }

  friend DualQuaternion operator+(const DualQuaternion& q, const DualQuaternion& p) {
    return DualQuaternion(q.real + p.real, q.dual + p.dual);
  }
  friend DualQuaternion operator-(const DualQuaternion& q, const DualQuaternion& p) {
    return DualQuaternion(q.real - p.real, q.dual - p.dual);
  }
  friend DualQuaternion operator*(const DualQuaternion& q, const DualQuaternion& p) {
    return DualQuaternion(q.real * p.real, q.real * p.dual + q.dual * p.real);
  }

  // Central dual-scalar multiple: (q + eps q*)(a + eps b) with a, b central.
  friend DualQuaternion operator*(const Dual<R>& s, const DualQuaternion& q) {
    return DualQuaternion(s.re * q.real, s.re * q.dual + s.du * q.real);
  }
  friend DualQuaternion operator*(const DualQuaternion& q, const Dual<R>& s) { return s * q; }

  DualQuaternion& operator+=(const DualQuaternion& p) { return *this = *this + p; }
  DualQuaternion& operator-=(const DualQuaternion& p) { return *this = *this - p; }
  DualQuaternion& operator*=(const DualQuaternion& p) { return *this = *this * p; }

  // conjugate(Q) / norm(Q). Defined only over a field R and only when the
  // real part of the norm is nonzero; otherwise throws NonInvertible.
  DualQuaternion inverse() const {
    Dual<R> n = norm();
    if (n.re == R{0}) throw NonInvertible("DualQuaternion: norm has zero real part");
    return conjugate() * n.inverse();
  }

  friend bool operator==(const DualQuaternion&, const DualQuaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const DualQuaternion& q) {
    return os << q.real << "+eps" << q.dual;
  }
};

// Scalar part S_Q and the three vector-part coefficients of i, j, k, each a
// dual number.
template <typename R>
struct SplitParts {
  Dual<R> scalar;
  std::array<Dual<R>, 3> vector;
};

template <typename R>
SplitParts<R> split_parts(const DualQuaternion<R>& q) {
  return SplitParts<R>{Dual<R>(q.real.w, q.dual.w),
                       {Dual<R>(q.real.x, q.dual.x), Dual<R>(q.real.y, q.dual.y),
                        Dual<R>(q.real.z, q.dual.z)}};
}

template <typename R>
DualQuaternion<R> assemble_parts(const SplitParts<R>& parts) {
  return DualQuaternion<R>(
      Quaternion<R>(parts.scalar.re, parts.vector[0].re, parts.vector[1].re, parts.vector[2].re),
      Quaternion<R>(parts.scalar.du, parts.vector[0].du, parts.vector[1].du, parts.vector[2].du));
}

// (q + eps q*) -> quaternion with dual-number components, componentwise.
template <typename R>
Quaternion<Dual<R>> transport(const DualQuaternion<R>& q) {
  return Quaternion<Dual<R>>(Dual<R>(q.real.w, q.dual.w), Dual<R>(q.real.x, q.dual.x),
                             Dual<R>(q.real.y, q.dual.y), Dual<R>(q.real.z, q.dual.z));
}

template <typename R>
DualQuaternion<R> untransport(const Quaternion<Dual<R>>& q) {
  return DualQuaternion<R>(Quaternion<R>(q.w.re, q.x.re, q.y.re, q.z.re),
                           Quaternion<R>(q.w.du, q.x.du, q.y.du, q.z.du));
}

}  // namespace fibdual
