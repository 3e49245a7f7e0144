#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibdual/quadrat.hpp"
#include "fibdual/rational.hpp"
#include "fibdual/sequences.hpp"
#include "test_util.hpp"

using fibdual::BigInt;
using fibdual::QuadRat;
using fibdual::Rational;
namespace tu = fibdual::testutil;

TEST_CASE("rationals normalize eagerly") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-3), BigInt(-6)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(-6)).num() == BigInt(-1));
  CHECK(Rational(BigInt(3), BigInt(-6)).den() == BigInt(2));
  CHECK(Rational(BigInt(0), BigInt(-5)).den() == BigInt(1));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
  Rational half(BigInt(1), BigInt(2));
  Rational third(BigInt(1), BigInt(3));
  CHECK(half + third == Rational(BigInt(5), BigInt(6)));
  CHECK(half - third == Rational(BigInt(1), BigInt(6)));
  CHECK(half * third == Rational(BigInt(1), BigInt(6)));
  CHECK(half / third == Rational(BigInt(3), BigInt(2)));
  CHECK(third < half);
  CHECK(half.inverse() == Rational(2));
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
  CHECK(half.str() == "1/2");
  CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("rational field axioms on random triples") {
  auto rng = tu::make_rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational a = tu::rand_rational(rng);
    Rational b = tu::rand_rational(rng);
    Rational c = tu::rand_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("quad_mul matches the expansion rule") {
  // (1 + sqrt5)(1 - sqrt5) = -4
  QuadRat x(Rational(1), Rational(1));
  QuadRat y(Rational(1), Rational(-1));
  CHECK(x * y == QuadRat(-4));

  // alpha * beta = -1 (Vieta on x^2 - x - 1)
  CHECK(QuadRat::alpha() * QuadRat::beta() == QuadRat(-1));

  // alpha^2 = (3 + sqrt5)/2
  QuadRat asq = QuadRat::alpha() * QuadRat::alpha();
  CHECK(asq == QuadRat(Rational(BigInt(3), BigInt(2)), Rational(BigInt(1), BigInt(2))));
  // equivalently alpha^2 = alpha + 1
  CHECK(asq == QuadRat::alpha() + QuadRat(1));
}

TEST_CASE("quad_inv via the conjugate") {
  CHECK(QuadRat(1).inverse() == QuadRat(1));
  CHECK(QuadRat::sqrt5().inverse() ==
        QuadRat(Rational(0), Rational(BigInt(1), BigInt(5))));
  CHECK(QuadRat::alpha().inverse() == -QuadRat::beta());
  CHECK_THROWS_AS(QuadRat(0).inverse(), std::domain_error);

  auto rng = tu::make_rng(12);
  for (int i = 0; i < 300; ++i) {
    QuadRat v(tu::rand_rational(rng), tu::rand_rational(rng));
    if (v.is_zero()) continue;
    CHECK(v * v.inverse() == QuadRat(1));
  }
}

TEST_CASE("quad_pow by squaring") {
  CHECK(QuadRat::alpha().pow(0) == QuadRat(1));
  CHECK(QuadRat::alpha().pow(2) == QuadRat::alpha() + QuadRat(1));
  CHECK(QuadRat::alpha().pow(5) ==
        QuadRat(Rational(BigInt(11), BigInt(2)), Rational(BigInt(5), BigInt(2))));
  CHECK(QuadRat::alpha().pow(-1) == -QuadRat::beta());
  CHECK_THROWS_AS(QuadRat(0).pow(-3), std::domain_error);

  auto rng = tu::make_rng(13);
  for (int i = 0; i < 100; ++i) {
    QuadRat v(tu::rand_rational(rng), tu::rand_rational(rng));
    std::int64_t a = tu::rand_int(rng, 0, 12);
    std::int64_t b = tu::rand_int(rng, 0, 12);
    CHECK(v.pow(a) * v.pow(b) == v.pow(a + b));
    if (!v.is_zero()) CHECK(v.pow(-a) == v.pow(a).inverse());
  }
}

TEST_CASE("field axioms in Q(sqrt5) on random triples") {
  auto rng = tu::make_rng(14);
  for (int i = 0; i < 300; ++i) {
    QuadRat a(tu::rand_rational(rng), tu::rand_rational(rng));
    QuadRat b(tu::rand_rational(rng), tu::rand_rational(rng));
    QuadRat c(tu::rand_rational(rng), tu::rand_rational(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("alpha^n = F(n) alpha + F(n-1)") {
  using fibdual::fib;
  const QuadRat alpha = QuadRat::alpha();
  for (std::int64_t n = 0; n <= 100; ++n) {
    QuadRat expect = QuadRat(Rational(fib(n))) * alpha + QuadRat(Rational(fib(n - 1)));
    CHECK(alpha.pow(n) == expect);
  }
}

TEST_CASE("(alpha^n - beta^n) / (alpha - beta) is the n-th Fibonacci number") {
  using fibdual::fib;
  const QuadRat alpha = QuadRat::alpha();
  const QuadRat beta = QuadRat::beta();
  const QuadRat inv_sqrt5 = QuadRat::sqrt5().inverse();
  for (std::int64_t n = -50; n <= 50; ++n) {
    QuadRat v = (alpha.pow(n) - beta.pow(n)) * inv_sqrt5;
    CHECK(v.is_rational());
    CHECK(v.a() == Rational(fib(n)));
  }
}

TEST_CASE("alpha and beta satisfy the defining relations") {
  CHECK(QuadRat::alpha() + QuadRat::beta() == QuadRat(1));
  CHECK(QuadRat::alpha() - QuadRat::beta() == QuadRat::sqrt5());
  CHECK(QuadRat::sqrt5() * QuadRat::sqrt5() == QuadRat(5));
}

TEST_CASE("quadrat string forms") {
  CHECK(QuadRat(7).str() == "7");
  CHECK(QuadRat::sqrt5().str() == "1*sqrt5");
  CHECK(QuadRat::alpha().str() == "1/2+1/2*sqrt5");
  CHECK(QuadRat::beta().str() == "1/2-1/2*sqrt5");
}
