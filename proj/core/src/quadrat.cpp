#include "fibdual/quadrat.hpp"

#include <ostream>
#include <stdexcept>

namespace fibdual {

QuadRat operator*(const QuadRat& x, const QuadRat& y) {
  const Rational five(5);
  return QuadRat(x.a_ * y.a_ + five * x.b_ * y.b_, x.a_ * y.b_ + y.a_ * x.b_);
}

QuadRat QuadRat::inverse() const {
  if (is_zero()) throw std::domain_error("QuadRat: inverse of zero");
  // The field norm a^2 - 5 b^2 vanishes only at zero (sqrt 5 is irrational).
  Rational norm = a_ * a_ - Rational(5) * b_ * b_;
  return QuadRat(a_ / norm, -b_ / norm);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * y.inverse(); }

QuadRat QuadRat::pow(std::int64_t n) const {
  QuadRat base = *this;
  std::uint64_t e;
  if (n < 0) {
    base = base.inverse();  // throws on zero
    e = ~static_cast<std::uint64_t>(n) + 1;
  } else {
    e = static_cast<std::uint64_t>(n);
  }
  QuadRat acc(1);
  while (e != 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string QuadRat::str() const {
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) {
    out = a_.str();
    out += b_.sign() < 0 ? "-" : "+";
    out += (b_.sign() < 0 ? -b_ : b_).str();
  } else {
    out = b_.str();
  }
  out += "*sqrt5";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadRat& v) { return os << v.str(); }

}  // namespace fibdual
