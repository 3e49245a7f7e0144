#pragma once

#include <cstdint>

#include "fibdual/dual_quaternion.hpp"
#include "fibdual/quadrat.hpp"
#include "fibdual/quaternion.hpp"
#include "fibdual/sequences.hpp"

namespace fibdual {

// Closed-form constants over Q(sqrt 5), built once:
//   alpha, beta        roots of x^2 - x - 1 = 0
//   alpha_q = 1 + i alpha + j alpha^2 + k alpha^3   (beta_q analogous)
//   alpha_star = alpha_q (1 + eps alpha)            (beta_star analogous)
struct BinetConstants {
  QuadRat alpha;
  QuadRat beta;
  QuadRat sqrt5;  // alpha - beta
  Quaternion<QuadRat> alpha_q;
  Quaternion<QuadRat> beta_q;
  DualQuaternion<QuadRat> alpha_star;
  DualQuaternion<QuadRat> beta_star;
};

const BinetConstants& binet_constants();

// Exact integer lifts into Q(sqrt 5).
QuadRat lift(const BigInt& v);
Quaternion<QuadRat> lift_quat(const Quaternion<BigInt>& q);
DualQuaternion<QuadRat> lift_dual_quat(const DualQuaternion<BigInt>& q);

// Closed form for the Fibonacci / Lucas quaternion:
//   Q(n) = (alpha_q alpha^n - beta_q beta^n) / (alpha - beta)
//   K(n) = alpha_q alpha^n + beta_q beta^n
// Requires n >= 0; throws std::invalid_argument otherwise.
Quaternion<QuadRat> binet_quat(SeqKind kind, std::int64_t n);

// Closed form for the dual Fibonacci / Lucas quaternion:
//   Q~(n) = (alpha_star alpha^n - beta_star beta^n) / (alpha - beta)
//   K~(n) = alpha_star alpha^n + beta_star beta^n
// Requires n >= 0; throws std::invalid_argument otherwise.
DualQuaternion<QuadRat> binet_dual_quat(SeqKind kind, std::int64_t n);

}  // namespace fibdual
