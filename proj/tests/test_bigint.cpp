#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fibdual/bigint.hpp"
#include "test_util.hpp"

using fibdual::BigInt;
namespace tu = fibdual::testutil;

namespace {

// Independent reference path: rebuild the value from 32-bit chunks.
BigInt from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : v;
  BigInt out(0);
  const BigInt base(1LL << 32);
  for (int shift = 96; shift >= 0; shift -= 32) {
    out = out * base + BigInt(static_cast<std::int64_t>((mag >> shift) & 0xffffffffULL));
  }
  return neg ? -out : out;
}

}  // namespace

TEST_CASE("int64 round trips through decimal strings") {
  auto rng = tu::make_rng(1);
  for (int i = 0; i < 500; ++i) {
    std::int64_t v = tu::rand_int(rng, INT64_MIN + 1, INT64_MAX);
    BigInt b(v);
    CHECK(b.str() == std::to_string(v));
    CHECK(BigInt::from_string(b.str()) == b);
  }
  CHECK(BigInt(0).str() == "0");
  CHECK(BigInt::from_string("-0") == BigInt(0));
  CHECK(BigInt::from_string("+17") == BigInt(17));
}

TEST_CASE("from_string rejects garbage") {
  CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("-"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string("12x4"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt::from_string(" 1"), std::invalid_argument);
}

TEST_CASE("zero is canonical") {
  CHECK(BigInt(5) - BigInt(5) == BigInt(0));
  CHECK(-BigInt(0) == BigInt(0));
  CHECK((BigInt(5) - BigInt(5)).sign() == 0);
  CHECK(BigInt(0) * BigInt(123456789) == BigInt());
}

TEST_CASE("arithmetic agrees with 128-bit integers") {
  auto rng = tu::make_rng(2);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = tu::rand_int(rng, -2'000'000'000'000'000'000, 2'000'000'000'000'000'000);
    std::int64_t b = tu::rand_int(rng, -2'000'000'000'000'000'000, 2'000'000'000'000'000'000);
    BigInt A(a), B(b);
    CHECK(A + B == from_i128(static_cast<__int128>(a) + b));
    CHECK(A - B == from_i128(static_cast<__int128>(a) - b));
    CHECK(A * B == from_i128(static_cast<__int128>(a) * b));
    if (b != 0) {
      auto [q, r] = divmod(A, B);
      CHECK(q == from_i128(static_cast<__int128>(a) / b));
      CHECK(r == from_i128(static_cast<__int128>(a) % b));
    }
  }
}

TEST_CASE("comparison agrees with int64") {
  auto rng = tu::make_rng(3);
  for (int i = 0; i < 500; ++i) {
    std::int64_t a = tu::rand_int(rng, -1000, 1000);
    std::int64_t b = tu::rand_int(rng, -1000, 1000);
    CHECK((BigInt(a) < BigInt(b)) == (a < b));
    CHECK((BigInt(a) <= BigInt(b)) == (a <= b));
    CHECK((BigInt(a) == BigInt(b)) == (a == b));
  }
}

TEST_CASE("wide values: division inverts multiplication") {
  auto rng = tu::make_rng(4);
  for (int i = 0; i < 300; ++i) {
    BigInt a = tu::rand_wide_bigint(rng);
    BigInt b = tu::rand_wide_bigint(rng, 3);
    if (b.is_zero()) continue;
    BigInt prod = a * b;
    auto [q, r] = divmod(prod, b);
    CHECK(q == a);
    CHECK(r.is_zero());
    auto [q2, r2] = divmod(prod + BigInt(1), b);
    CHECK(q2 * b + r2 == prod + BigInt(1));
    CHECK(r2.abs() < b.abs());
  }
}

TEST_CASE("divmod invariant on random wide pairs") {
  auto rng = tu::make_rng(5);
  for (int i = 0; i < 300; ++i) {
    BigInt u = tu::rand_wide_bigint(rng, 5);
    BigInt v = tu::rand_wide_bigint(rng, 2);
    if (v.is_zero()) continue;
    auto [q, r] = divmod(u, v);
    CHECK(q * v + r == u);
    CHECK(r.abs() < v.abs());
    if (!r.is_zero()) CHECK(r.sign() == u.sign());
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(BigInt(1) / BigInt(0), std::domain_error);
  CHECK_THROWS_AS(divmod(BigInt(0), BigInt(0)), std::domain_error);
}

TEST_CASE("gcd properties") {
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-7)) == BigInt(7));
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  auto rng = tu::make_rng(6);
  for (int i = 0; i < 200; ++i) {
    BigInt a = tu::rand_wide_bigint(rng, 2);
    BigInt b = tu::rand_wide_bigint(rng, 2);
    BigInt g = BigInt::gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK(BigInt::gcd(a / g, b / g) == BigInt(1));
  }
}

TEST_CASE("string round trip on wide products") {
  auto rng = tu::make_rng(7);
  for (int i = 0; i < 100; ++i) {
    BigInt a = tu::rand_wide_bigint(rng, 6);
    CHECK(BigInt::from_string(a.str()) == a);
  }
}
