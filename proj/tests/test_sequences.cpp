#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibdual/sequences.hpp"
#include "oracles.hpp"

using fibdual::BigInt;
using fibdual::Dual;
using fibdual::DualQuaternion;
using fibdual::dual_number;
using fibdual::dual_quat;
using fibdual::fib;
using fibdual::lucas;
using fibdual::quat;
using fibdual::Quaternion;
using fibdual::SeqKind;

using QB = Quaternion<BigInt>;
using DB = Dual<BigInt>;

TEST_CASE("fibonacci point values") {
  CHECK(fib(0) == BigInt(0));
  CHECK(fib(1) == BigInt(1));
  CHECK(fib(10) == BigInt(55));
  CHECK(fib(-4) == BigInt(-3));
  CHECK(fib(-1) == BigInt(1));
  CHECK(fib(93) == BigInt::from_string("12200160415121876738"));
  CHECK(fib(200) == BigInt::from_string("280571172992510140037611932413038677189525"));
}

TEST_CASE("lucas point values") {
  CHECK(lucas(0) == BigInt(2));
  CHECK(lucas(1) == BigInt(1));
  CHECK(lucas(7) == BigInt(29));
  CHECK(lucas(-3) == BigInt(-4));
  CHECK(lucas(-4) == BigInt(7));
}

TEST_CASE("fast doubling agrees with the naive recurrence on [-200, 200]") {
  for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
    auto table = fibdual::oracle::naive_table(kind, -200, 200);
    for (std::int64_t n = -200; n <= 200; ++n) {
      BigInt got = kind == SeqKind::Fibonacci ? fib(n) : lucas(n);
      CHECK(got == table.at(n));
    }
  }
}

TEST_CASE("dual numbers pair consecutive values") {
  CHECK(dual_number(SeqKind::Fibonacci, 3) == DB(BigInt(2), BigInt(3)));
  CHECK(dual_number(SeqKind::Lucas, 0) == DB(BigInt(2), BigInt(1)));
  CHECK(dual_number(SeqKind::Fibonacci, 0) == DB(BigInt(0), BigInt(1)));
}

TEST_CASE("sequence quaternions take four consecutive values") {
  CHECK(quat(SeqKind::Fibonacci, 1) == QB(BigInt(1), BigInt(1), BigInt(2), BigInt(3)));
  CHECK(quat(SeqKind::Fibonacci, 0) == QB(BigInt(0), BigInt(1), BigInt(1), BigInt(2)));
  CHECK(quat(SeqKind::Lucas, 1) == QB(BigInt(1), BigInt(3), BigInt(4), BigInt(7)));
}

TEST_CASE("dual sequence quaternions") {
  auto q1 = dual_quat(SeqKind::Fibonacci, 1);
  CHECK(q1.real == QB(BigInt(1), BigInt(1), BigInt(2), BigInt(3)));
  CHECK(q1.dual == QB(BigInt(1), BigInt(2), BigInt(3), BigInt(5)));

  auto q0 = dual_quat(SeqKind::Fibonacci, 0);
  CHECK(q0.real == QB(BigInt(0), BigInt(1), BigInt(1), BigInt(2)));
  CHECK(q0.dual == QB(BigInt(1), BigInt(1), BigInt(2), BigInt(3)));

  auto k0 = dual_quat(SeqKind::Lucas, 0);
  CHECK(k0.real == QB(BigInt(2), BigInt(1), BigInt(3), BigInt(4)));
  CHECK(k0.dual == QB(BigInt(1), BigInt(3), BigInt(4), BigInt(7)));
}

TEST_CASE("dual quaternions satisfy the recurrence on [-50, 50]") {
  for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
    for (std::int64_t n = -50; n <= 50; ++n) {
      CHECK(dual_quat(kind, n) + dual_quat(kind, n + 1) == dual_quat(kind, n + 2));
    }
  }
}

TEST_CASE("both construction orders agree under transport on [-50, 50]") {
  for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
    for (std::int64_t n = -50; n <= 50; ++n) {
      // Quaternion of dual numbers, built from dual sequence numbers.
      Quaternion<DB> from_duals(dual_number(kind, n), dual_number(kind, n + 1),
                                dual_number(kind, n + 2), dual_number(kind, n + 3));
      CHECK(transport(dual_quat(kind, n)) == from_duals);
    }
  }
}

TEST_CASE("L(n) = F(n-1) + F(n+1) on [-50, 50]") {
  for (std::int64_t n = -50; n <= 50; ++n) {
    CHECK(lucas(n) == fib(n - 1) + fib(n + 1));
  }
}

TEST_CASE("seq_window matches point queries across the sign boundary") {
  auto w = fibdual::seq_window(SeqKind::Fibonacci, -3, 7);
  for (int i = 0; i < 7; ++i) CHECK(w[static_cast<std::size_t>(i)] == fib(-3 + i));
}
