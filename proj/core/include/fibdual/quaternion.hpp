#pragma once

#include <ostream>
#include <utility>

namespace fibdual {

// Quaternion w + xi + yj + zk over a commutative ring R. The basis obeys
//   i^2 = j^2 = k^2 = -1,  ij = -ji = k,  jk = -kj = i,  ki = -ik = j,
// so multiplication is noncommutative in general. R must supply +, -, *,
// unary -, ==, and construction from a small integer.
template <typename R>
struct Quaternion {
  R w{0};
  R x{0};
  R y{0};
  R z{0};

  Quaternion() = default;
  Quaternion(R w_, R x_, R y_, R z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion scalar(R s) { return Quaternion(std::move(s), R{0}, R{0}, R{0}); }
  static Quaternion unit_i() { return Quaternion(R{0}, R{1}, R{0}, R{0}); }
  static Quaternion unit_j() { return Quaternion(R{0}, R{0}, R{1}, R{0}); }
  static Quaternion unit_k() { return Quaternion(R{0}, R{0}, R{0}, R{1}); }

  Quaternion conjugate() const { return Quaternion(w, -x, -y, -z); }

  // w^2 + x^2 + y^2 + z^2; equals the scalar part of q * conjugate(q).
  R norm() const { return w * w + x * x + y * y + z * z; }

  Quaternion operator-() const { return Quaternion(-w, -x, -y, -z); }

  friend Quaternion operator+(const Quaternion& q, const Quaternion& p) {
    return Quaternion(q.w + p.w, q.x + p.x, q.y + p.y, q.z + p.z);
  }
  friend Quaternion operator-(const Quaternion& q, const Quaternion& p) {
    return Quaternion(q.w - p.w, q.x - p.x, q.y - p.y, q.z - p.z);
  }
  friend Quaternion operator*(const Quaternion& q, const Quaternion& p) {
    return Quaternion(
        q.w * p.w - (q.x * p.x + q.y * p.y + q.z * p.z),
        q.w * p.x + q.x * p.w + q.y * p.z - q.z * p.y,
        q.w * p.y + q.y * p.w + q.z * p.x - q.x * p.z,
        q.w * p.z + q.z * p.w + q.x * p.y - q.y * p.x);
  }

  // Central scalar multiple.
  friend Quaternion operator*(const R& s, const Quaternion& q) {
    return Quaternion(s * q.w, s * q.x, s * q.y, s * q.z);
  }
  friend Quaternion operator*(const Quaternion& q, const R& s) { return s * q; }

  Quaternion& operator+=(const Quaternion& p) { return *this = *this + p; }
  Quaternion& operator-=(const Quaternion& p) { return *this = *this - p; }
  Quaternion& operator*=(const Quaternion& p) { return *this = *this * p; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
  }
};

}  // namespace fibdual
