#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fibdual/bigint.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/dual_quaternion.hpp"
#include "fibdual/quaternion.hpp"

namespace fibdual {

enum class SeqKind { Fibonacci, Lucas };

std::string_view to_string(SeqKind kind);

// F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2); any integer index, with
// F(-n) = (-1)^(n+1) F(n). Computed by fast doubling.
BigInt fib(std::int64_t n);

// L(0)=2, L(1)=1, L(n)=L(n-1)+L(n-2); any integer index, with
// L(-n) = (-1)^n L(n).
BigInt lucas(std::int64_t n);

// Consecutive run S(n), S(n+1), ..., S(n+count-1) of the selected sequence.
std::vector<BigInt> seq_window(SeqKind kind, std::int64_t n, int count);

// Dual Fibonacci / Lucas number: S(n) + eps S(n+1).
Dual<BigInt> dual_number(SeqKind kind, std::int64_t n);

// Fibonacci / Lucas quaternion: S(n) + i S(n+1) + j S(n+2) + k S(n+3).
Quaternion<BigInt> quat(SeqKind kind, std::int64_t n);

// Dual Fibonacci / Lucas quaternion: quat(n) + eps quat(n+1). Equal, under
// transport, to the quaternion of dual numbers built from dual_number(n..n+3).
DualQuaternion<BigInt> dual_quat(SeqKind kind, std::int64_t n);

}  // namespace fibdual
