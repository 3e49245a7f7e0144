#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "fibdual/rational.hpp"

namespace fibdual {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5), with exact
// rational coordinates. The representation is unique, so equality is
// structural and identities can be tested with equality instead of a
// floating-point tolerance. Multiplication uses (sqrt 5)^2 = 5.
class QuadRat {
 public:
  QuadRat() = default;
  QuadRat(std::int64_t value) : a_(value) {}
  explicit QuadRat(Rational rational_part) : a_(std::move(rational_part)) {}
  QuadRat(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  // sqrt(5) itself.
  static QuadRat sqrt5() { return QuadRat(Rational(0), Rational(1)); }
  // The roots of x^2 - x - 1 = 0: alpha = (1+sqrt5)/2, beta = (1-sqrt5)/2.
  static QuadRat alpha() { return QuadRat(Rational(1, 2), Rational(1, 2)); }
  static QuadRat beta() { return QuadRat(Rational(1, 2), Rational(-1, 2)); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const noexcept { return b_.is_zero(); }

  QuadRat operator-() const { return QuadRat(-a_, -b_); }
  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y);
  friend QuadRat operator/(const QuadRat& x, const QuadRat& y);

  QuadRat& operator+=(const QuadRat& y) { return *this = *this + y; }
  QuadRat& operator-=(const QuadRat& y) { return *this = *this - y; }
  QuadRat& operator*=(const QuadRat& y) { return *this = *this * y; }

  // 1/(a + b sqrt5) = (a - b sqrt5) / (a^2 - 5 b^2).
  // Throws std::domain_error on zero.
  QuadRat inverse() const;

  // Exact n-th power by squaring; negative n goes through inverse().
  QuadRat pow(std::int64_t n) const;

  friend bool operator==(const QuadRat&, const QuadRat&) noexcept = default;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadRat& v);

 private:
  Rational a_;
  Rational b_;
};

}  // namespace fibdual
