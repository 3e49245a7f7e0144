#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "fibdual/bigint.hpp"

namespace fibdual {

// Exact rational number. Always kept canonical: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero is 0/1. Equality is structural.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const noexcept { return num_.sign(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  // Throws std::domain_error on zero.
  Rational inverse() const;

  friend bool operator==(const Rational&, const Rational&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;  // > 0
};

}  // namespace fibdual
