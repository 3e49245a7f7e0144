#pragma once

#include <cstdint>
#include <ostream>
#include <utility>

#include "fibdual/errors.hpp"

namespace fibdual {

// Dual number re + eps*du over a commutative ring R, where eps^2 = 0 and
// eps != 0. The product rule kills the eps^2 term exactly:
//   (a + eps b)(c + eps d) = ac + eps(ad + bc).
template <typename R>
struct Dual {
  R re{0};
  R du{0};

  Dual() = default;
  Dual(std::int64_t value) : re(value), du(0) {}
  Dual(R real_part, R dual_part) : re(std::move(real_part)), du(std::move(dual_part)) {}

  static Dual eps() { return Dual(R{0}, R{1}); }

  bool is_zero() const { return re == R{0} && du == R{0}; }

  Dual operator-() const { return Dual(-re, -du); }

  friend Dual operator+(const Dual& x, const Dual& y) { return Dual(x.re + y.re, x.du + y.du); }
  friend Dual operator-(const Dual& x, const Dual& y) { return Dual(x.re - y.re, x.du - y.du); }
  friend Dual operator*(const Dual& x, const Dual& y) {
    return Dual(x.re * y.re, x.re * y.du + x.du * y.re);
  }

  Dual& operator+=(const Dual& y) { return *this = *this + y; }
  Dual& operator-=(const Dual& y) { return *this = *this - y; }
  Dual& operator*=(const Dual& y) { return *this = *this * y; }

  // (a + eps b)^-1 = a^-1 - eps b a^-2, defined iff a is invertible in R.
  // Only meaningful when R is a field; throws NonInvertible on re == 0.
  Dual inverse() const {
    if (re == R{0}) throw NonInvertible("Dual: real part is zero");
    R re_inv = R{1} / re;
    return Dual(re_inv, -(du * re_inv * re_inv));
  }

  friend bool operator==(const Dual&, const Dual&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << d.re << "+" << d.du << "eps";
  }
};

}  // namespace fibdual
