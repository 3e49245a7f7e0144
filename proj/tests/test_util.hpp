#pragma once

#include <cstdint>
#include <random>

#include "fibdual/bigint.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/dual_quaternion.hpp"
#include "fibdual/quaternion.hpp"
#include "fibdual/rational.hpp"

namespace fibdual::testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline BigInt rand_bigint(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return BigInt(rand_int(rng, lo, hi));
}

// A value with a few hundred bits, for exercising multi-limb paths.
inline BigInt rand_wide_bigint(std::mt19937_64& rng, int factors = 4) {
  BigInt acc(rand_int(rng, -1'000'000'000'000'000'000, 1'000'000'000'000'000'000));
  for (int i = 1; i < factors; ++i) {
    acc = acc * BigInt(rand_int(rng, 1, 1'000'000'000'000'000'000));
  }
  return acc;
}

inline Quaternion<BigInt> rand_quat(std::mt19937_64& rng, std::int64_t lo = -9,
                                    std::int64_t hi = 9) {
  return Quaternion<BigInt>(rand_bigint(rng, lo, hi), rand_bigint(rng, lo, hi),
                            rand_bigint(rng, lo, hi), rand_bigint(rng, lo, hi));
}

inline DualQuaternion<BigInt> rand_dual_quat(std::mt19937_64& rng, std::int64_t lo = -9,
                                             std::int64_t hi = 9) {
  return DualQuaternion<BigInt>(rand_quat(rng, lo, hi), rand_quat(rng, lo, hi));
}

inline Rational rand_rational(std::mt19937_64& rng) {
  return Rational(rand_bigint(rng, -50, 50), rand_bigint(rng, 1, 30));
}

inline Quaternion<Rational> rand_quat_rational(std::mt19937_64& rng) {
  return Quaternion<Rational>(rand_rational(rng), rand_rational(rng), rand_rational(rng),
                              rand_rational(rng));
}

inline DualQuaternion<Rational> rand_invertible_dual_quat(std::mt19937_64& rng) {
  for (;;) {
    DualQuaternion<Rational> q(rand_quat_rational(rng), rand_quat_rational(rng));
    if (!q.norm().re.is_zero()) return q;
  }
}

}  // namespace fibdual::testutil
