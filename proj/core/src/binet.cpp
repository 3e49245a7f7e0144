#include "fibdual/binet.hpp"

#include <stdexcept>

namespace fibdual {

namespace {

BinetConstants make_constants() {
  BinetConstants c;
  c.alpha = QuadRat::alpha();
  c.beta = QuadRat::beta();
  c.sqrt5 = QuadRat::sqrt5();
  c.alpha_q = Quaternion<QuadRat>(QuadRat(1), c.alpha, c.alpha.pow(2), c.alpha.pow(3));
  c.beta_q = Quaternion<QuadRat>(QuadRat(1), c.beta, c.beta.pow(2), c.beta.pow(3));
  // alpha_star = alpha_q (1 + eps alpha), multiplied on the right as a
  // central dual scalar.
  c.alpha_star = DualQuaternion<QuadRat>::from_quat(c.alpha_q) *
                 Dual<QuadRat>(QuadRat(1), c.alpha);
  c.beta_star = DualQuaternion<QuadRat>::from_quat(c.beta_q) *
                Dual<QuadRat>(QuadRat(1), c.beta);
  return c;
}

void require_nonnegative(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("binet: index must be >= 0");
}

}  // namespace

const BinetConstants& binet_constants() {
  static const BinetConstants c = make_constants();
  return c;
}

QuadRat lift(const BigInt& v) { return QuadRat(Rational(v)); }

Quaternion<QuadRat> lift_quat(const Quaternion<BigInt>& q) {
  return Quaternion<QuadRat>(lift(q.w), lift(q.x), lift(q.y), lift(q.z));
}

DualQuaternion<QuadRat> lift_dual_quat(const DualQuaternion<BigInt>& q) {
  return DualQuaternion<QuadRat>(lift_quat(q.real), lift_quat(q.dual));
}

Quaternion<QuadRat> binet_quat(SeqKind kind, std::int64_t n) {
  require_nonnegative(n);
  const BinetConstants& c = binet_constants();
  QuadRat an = c.alpha.pow(n);
  QuadRat bn = c.beta.pow(n);
  if (kind == SeqKind::Fibonacci) {
    return c.sqrt5.inverse() * (c.alpha_q * an - c.beta_q * bn);
  }
  return c.alpha_q * an + c.beta_q * bn;
}

DualQuaternion<QuadRat> binet_dual_quat(SeqKind kind, std::int64_t n) {
  require_nonnegative(n);
  const BinetConstants& c = binet_constants();
  Dual<QuadRat> an(c.alpha.pow(n), QuadRat(0));
  Dual<QuadRat> bn(c.beta.pow(n), QuadRat(0));
  if (kind == SeqKind::Fibonacci) {
    Dual<QuadRat> inv_sqrt5(c.sqrt5.inverse(), QuadRat(0));
    return (c.alpha_star * an - c.beta_star * bn) * inv_sqrt5;
  }
  return c.alpha_star * an + c.beta_star * bn;
}

}  // namespace fibdual
