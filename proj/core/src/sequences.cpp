#include "fibdual/sequences.hpp"

#include <bit>
#include <utility>

namespace fibdual {

std::string_view to_string(SeqKind kind) {
  return kind == SeqKind::Fibonacci ? "fib" : "lucas";
}

namespace {

// (F(n), F(n+1)) for n >= 0 by fast doubling:
//   F(2k)   = F(k) (2 F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
std::pair<BigInt, BigInt> fib_pair(std::uint64_t n) {
  BigInt a(0), b(1);
  if (n == 0) return {a, b};
  int top = 63 - std::countl_zero(n);
  for (int i = top; i >= 0; --i) {
    BigInt c = a * (b + b - a);
    BigInt d = a * a + b * b;
    if ((n >> i) & 1) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

std::uint64_t magnitude(std::int64_t n) {
  return n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
}

}  // namespace

BigInt fib(std::int64_t n) {
  std::uint64_t m = magnitude(n);
  BigInt f = fib_pair(m).first;
  if (n < 0 && (m % 2 == 0)) f = -f;
  return f;
}

BigInt lucas(std::int64_t n) {
  // L(n) = 2 F(n+1) - F(n), valid for every integer n.
  return fib(n + 1) + fib(n + 1) - fib(n);
}

std::vector<BigInt> seq_window(SeqKind kind, std::int64_t n, int count) {
  if (count <= 0) return {};
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  BigInt prev = kind == SeqKind::Fibonacci ? fib(n) : lucas(n);
  out.push_back(std::move(prev));
  if (count == 1) return out;
  out.push_back(kind == SeqKind::Fibonacci ? fib(n + 1) : lucas(n + 1));
  for (int i = 2; i < count; ++i) {
    out.push_back(out[static_cast<std::size_t>(i) - 1] + out[static_cast<std::size_t>(i) - 2]);
  }
  return out;
}

Dual<BigInt> dual_number(SeqKind kind, std::int64_t n) {
  auto w = seq_window(kind, n, 2);
  return Dual<BigInt>(std::move(w[0]), std::move(w[1]));
}

Quaternion<BigInt> quat(SeqKind kind, std::int64_t n) {
  auto w = seq_window(kind, n, 4);
  return Quaternion<BigInt>(std::move(w[0]), std::move(w[1]), std::move(w[2]), std::move(w[3]));
}

DualQuaternion<BigInt> dual_quat(SeqKind kind, std::int64_t n) {
  auto w = seq_window(kind, n, 5);
  Quaternion<BigInt> real(w[0], w[1], w[2], w[3]);
  Quaternion<BigInt> dual(w[1], w[2], w[3], w[4]);
  return DualQuaternion<BigInt>(std::move(real), std::move(dual));
}

}  // namespace fibdual
