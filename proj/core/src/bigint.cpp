#include "fibdual/bigint.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace fibdual {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
constexpr std::uint32_t kDecChunkDigits = 9;
constexpr std::uint32_t kDecChunk = 1000000000u;  // 10^9 < 2^32
}  // namespace

BigInt::BigInt(std::int64_t value) {
  if (value == 0) return;
  sign_ = value < 0 ? -1 : 1;
  // Avoids overflow on INT64_MIN.
  std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1
                                : static_cast<std::uint64_t>(value);
  limbs_.push_back(static_cast<Limb>(mag));
  if (mag >> 32) limbs_.push_back(static_cast<Limb>(mag >> 32));
}

BigInt::BigInt(int sign, Limbs limbs) : sign_(sign), limbs_(std::move(limbs)) {
  trim(limbs_);
  if (limbs_.empty()) sign_ = 0;
}

void BigInt::trim(Limbs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int BigInt::compare_mag(const Limbs& a, const Limbs& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

BigInt::Limbs BigInt::add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& lo = a.size() < b.size() ? a : b;
  const Limbs& hi = a.size() < b.size() ? b : a;
  Limbs out(hi.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < hi.size(); ++i) {
    std::uint64_t s = std::uint64_t{hi[i]} + (i < lo.size() ? lo[i] : 0) + carry;
    out[i] = static_cast<Limb>(s);
    carry = s >> 32;
  }
  out[hi.size()] = static_cast<Limb>(carry);
  trim(out);
  return out;
}

BigInt::Limbs BigInt::sub_mag(const Limbs& a, const Limbs& b) {
  Limbs out(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                     static_cast<std::int64_t>(i < b.size() ? b[i] : 0);
    borrow = d < 0 ? 1 : 0;
    out[i] = static_cast<Limb>(d);
  }
  trim(out);
  return out;
}

BigInt::Limbs BigInt::mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  Limbs out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + std::uint64_t{a[i]} * b[j] + carry;
      out[i + j] = static_cast<Limb>(cur);
      carry = cur >> 32;
    }
    out[i + b.size()] = static_cast<Limb>(carry);
  }
  trim(out);
  return out;
}

BigInt::Limbs BigInt::shift_left_bits(const Limbs& a, unsigned s) {
  if (s == 0 || a.empty()) return a;
  Limbs out(a.size() + 1, 0);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = (a[i] << s) | carry;
    carry = static_cast<std::uint32_t>(std::uint64_t{a[i]} >> (32 - s));
  }
  out[a.size()] = carry;
  trim(out);
  return out;
}

BigInt::Limbs BigInt::shift_right_bits(const Limbs& a, unsigned s) {
  if (s == 0 || a.empty()) return a;
  Limbs out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t cur = std::uint64_t{a[i]} >> s;
    if (i + 1 < a.size()) cur |= std::uint64_t{a[i + 1]} << (32 - s);
    out[i] = static_cast<Limb>(cur);
  }
  trim(out);
  return out;
}

// Knuth algorithm D over 32-bit limbs with 64-bit temporaries.
std::pair<BigInt::Limbs, BigInt::Limbs> BigInt::divmod_mag(const Limbs& u, const Limbs& v) {
  if (compare_mag(u, v) < 0) return {{}, u};
  if (v.size() == 1) {
    Limbs q(u.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u[i];
      q[i] = static_cast<Limb>(cur / v[0]);
      rem = cur % v[0];
    }
    trim(q);
    Limbs r;
    if (rem) r.push_back(static_cast<Limb>(rem));
    return {q, r};
  }

  const unsigned shift = static_cast<unsigned>(std::countl_zero(v.back()));
  Limbs vn = shift_left_bits(v, shift);
  Limbs un = shift_left_bits(u, shift);
  const std::size_t n = vn.size();
  un.push_back(0);  // u gets an extra high limb for the first step
  const std::size_t m = un.size() - 1 - n;

  Limbs q(m + 1, 0);
  for (std::size_t jj = m + 1; jj-- > 0;) {
    const std::size_t j = jj;
    std::uint64_t num = (std::uint64_t{un[j + n]} << 32) | un[j + n - 1];
    std::uint64_t qhat = num / vn[n - 1];
    std::uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase ||
           qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }

    // Multiply and subtract qhat * vn from un[j .. j+n].
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * vn[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) -
                       static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
      un[i + j] = static_cast<Limb>(t);
      borrow = t < 0 ? 1 : 0;
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) -
                     static_cast<std::int64_t>(carry) - borrow;
    un[j + n] = static_cast<Limb>(t);

    if (t < 0) {  // qhat was one too large; add the divisor back
      --qhat;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = std::uint64_t{un[i + j]} + vn[i] + c;
        un[i + j] = static_cast<Limb>(s);
        c = s >> 32;
      }
      un[j + n] = static_cast<Limb>(un[j + n] + c);
    }
    q[j] = static_cast<Limb>(qhat);
  }

  trim(q);
  un.resize(n);
  Limbs r = shift_right_bits(un, shift);
  return {q, r};
}

BigInt BigInt::abs() const { return BigInt(sign_ < 0 ? 1 : sign_, limbs_); }

BigInt BigInt::operator-() const { return BigInt(-sign_, limbs_); }

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0) return b;
  if (b.sign_ == 0) return a;
  if (a.sign_ == b.sign_) return BigInt(a.sign_, BigInt::add_mag(a.limbs_, b.limbs_));
  int cmp = BigInt::compare_mag(a.limbs_, b.limbs_);
  if (cmp == 0) return BigInt();
  return cmp > 0 ? BigInt(a.sign_, BigInt::sub_mag(a.limbs_, b.limbs_))
                 : BigInt(b.sign_, BigInt::sub_mag(b.limbs_, a.limbs_));
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
  return BigInt(a.sign_ * b.sign_, BigInt::mul_mag(a.limbs_, b.limbs_));
}

std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
  if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
  if (a.sign_ == 0) return {BigInt(), BigInt()};
  auto [qm, rm] = BigInt::divmod_mag(a.limbs_, b.limbs_);
  return {BigInt(a.sign_ * b.sign_, std::move(qm)), BigInt(a.sign_, std::move(rm))};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }

BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) noexcept {
  if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
  int cmp = BigInt::compare_mag(a.limbs_, b.limbs_) * a.sign_;
  return cmp <=> 0;
}

BigInt BigInt::from_string(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt out;
  const BigInt chunk_base(static_cast<std::int64_t>(kDecChunk));
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t take = std::min<std::size_t>(kDecChunkDigits, text.size() - pos);
    std::uint32_t chunk = 0;
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < take; ++i) {
      char c = text[pos + i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid digit");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    out = out * BigInt(static_cast<std::int64_t>(scale)) +
          BigInt(static_cast<std::int64_t>(chunk));
    pos += take;
  }
  return negative ? -out : out;
}

std::string BigInt::str() const {
  if (sign_ == 0) return "0";
  Limbs mag = limbs_;
  std::vector<std::uint32_t> chunks;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<Limb>(cur / kDecChunk);
      rem = cur % kDecChunk;
    }
    trim(mag);
    chunks.push_back(static_cast<std::uint32_t>(rem));
  }
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out += std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(kDecChunkDigits - part.size(), '0');
    out += part;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

}  // namespace fibdual
