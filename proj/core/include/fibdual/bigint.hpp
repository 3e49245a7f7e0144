#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibdual {

// Arbitrary-precision signed integer: sign + magnitude over 32-bit limbs
// (little-endian, no trailing zero limbs). Zero has exactly one
// representation: empty limb vector and sign 0.
class BigInt {
 public:
  BigInt() = default;
  BigInt(std::int64_t value);

  // Parses an optionally signed decimal string. Throws std::invalid_argument
  // on empty input or stray characters.
  static BigInt from_string(std::string_view text);

  bool is_zero() const noexcept { return sign_ == 0; }
  int sign() const noexcept { return sign_; }

  BigInt abs() const;
  BigInt operator-() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
  BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
  BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

  // Quotient truncated toward zero, remainder carries the dividend's sign.
  // Throws std::domain_error when the divisor is zero.
  friend std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // Nonnegative gcd; gcd(0, 0) = 0.
  static BigInt gcd(BigInt a, BigInt b);

  friend bool operator==(const BigInt&, const BigInt&) noexcept = default;
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

 private:
  using Limb = std::uint32_t;
  using Limbs = std::vector<Limb>;

  static int compare_mag(const Limbs& a, const Limbs& b) noexcept;
  static Limbs add_mag(const Limbs& a, const Limbs& b);
  static Limbs sub_mag(const Limbs& a, const Limbs& b);  // requires a >= b
  static Limbs mul_mag(const Limbs& a, const Limbs& b);
  static std::pair<Limbs, Limbs> divmod_mag(const Limbs& u, const Limbs& v);
  static Limbs shift_left_bits(const Limbs& a, unsigned s);
  static Limbs shift_right_bits(const Limbs& a, unsigned s);
  static void trim(Limbs& a);

  BigInt(int sign, Limbs limbs);

  int sign_ = 0;   // -1, 0, +1; 0 iff limbs_ empty
  Limbs limbs_;
};

}  // namespace fibdual
