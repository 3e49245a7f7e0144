#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibdual/binet.hpp"

using fibdual::binet_constants;
using fibdual::binet_dual_quat;
using fibdual::binet_quat;
using fibdual::dual_quat;
using fibdual::lift_dual_quat;
using fibdual::lift_quat;
using fibdual::quat;
using fibdual::QuadRat;
using fibdual::Rational;
using fibdual::SeqKind;

TEST_CASE("the constants satisfy their defining relations") {
  const auto& c = binet_constants();
  CHECK(c.alpha + c.beta == QuadRat(1));
  CHECK(c.alpha * c.beta == QuadRat(-1));
  CHECK(c.alpha - c.beta == c.sqrt5);

  // alpha_q = 1 + i alpha + j alpha^2 + k alpha^3
  CHECK(c.alpha_q.w == QuadRat(1));
  CHECK(c.alpha_q.x == c.alpha);
  CHECK(c.alpha_q.y == c.alpha * c.alpha);
  CHECK(c.alpha_q.z == c.alpha * c.alpha * c.alpha);

  // alpha_star = alpha_q + eps alpha_q alpha (and the beta analogue)
  CHECK(c.alpha_star.real == c.alpha_q);
  CHECK(c.alpha_star.dual == c.alpha_q * c.alpha);
  CHECK(c.beta_star.real == c.beta_q);
  CHECK(c.beta_star.dual == c.beta_q * c.beta);
}

TEST_CASE("closed form for plain sequence quaternions") {
  CHECK(binet_quat(SeqKind::Fibonacci, 0) == lift_quat(quat(SeqKind::Fibonacci, 0)));
  CHECK(binet_quat(SeqKind::Fibonacci, 1) == lift_quat(quat(SeqKind::Fibonacci, 1)));
  // alpha_q + beta_q = 2 + i + 3j + 4k
  auto k0 = binet_quat(SeqKind::Lucas, 0);
  CHECK(k0.w == QuadRat(2));
  CHECK(k0.x == QuadRat(1));
  CHECK(k0.y == QuadRat(3));
  CHECK(k0.z == QuadRat(4));

  for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
    for (std::int64_t n = 0; n <= 100; ++n) {
      CHECK(binet_quat(kind, n) == lift_quat(quat(kind, n)));
    }
  }
}

TEST_CASE("closed form for dual sequence quaternions") {
  CHECK(binet_dual_quat(SeqKind::Fibonacci, 0) ==
        lift_dual_quat(dual_quat(SeqKind::Fibonacci, 0)));
  CHECK(binet_dual_quat(SeqKind::Lucas, 0) == lift_dual_quat(dual_quat(SeqKind::Lucas, 0)));
  CHECK(binet_dual_quat(SeqKind::Fibonacci, 10) ==
        lift_dual_quat(dual_quat(SeqKind::Fibonacci, 10)));

  for (SeqKind kind : {SeqKind::Fibonacci, SeqKind::Lucas}) {
    for (std::int64_t n = 0; n <= 100; ++n) {
      CHECK(binet_dual_quat(kind, n) == lift_dual_quat(dual_quat(kind, n)));
    }
  }
}

TEST_CASE("negative indices are rejected") {
  CHECK_THROWS_AS(binet_quat(SeqKind::Fibonacci, -1), std::invalid_argument);
  CHECK_THROWS_AS(binet_dual_quat(SeqKind::Lucas, -3), std::invalid_argument);
}
