#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncpark/errors.hpp"

namespace ncpark {

// Arbitrary-width signed integer, sign-magnitude with 32-bit limbs (little
// endian). Schoolbook arithmetic throughout; operands in this project stay
// well under a hundred limbs, so simplicity wins over asymptotics.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    auto u = static_cast<unsigned long long>(v < 0 ? -(v + 1) : v);
    if (v < 0) ++u;  // avoids overflow on LLONG_MIN
    while (u != 0) {
      mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
      u >>= 32;
    }
  }

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw invalid_input("empty integer literal");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw invalid_input("sign without digits");
    BigInt r;
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (c < '0' || c > '9')
        throw invalid_input("bad digit in integer literal: " + std::string(s));
      mul_small(r.mag_, 10);
      add_small(r.mag_, static_cast<std::uint32_t>(c - '0'));
    }
    r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
    return r;
  }

  bool is_zero() const { return sign_ == 0; }
  bool is_negative() const { return sign_ < 0; }
  int sign() const { return sign_; }

  BigInt operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
  }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = mag_add(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = mag_cmp(a.mag_, b.mag_);
      if (c == 0) return BigInt();
      if (c > 0) {
        r.mag_ = mag_sub(a.mag_, b.mag_);
        r.sign_ = a.sign_;
      } else {
        r.mag_ = mag_sub(b.mag_, a.mag_);
        r.sign_ = b.sign_;
      }
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_ = mag_mul(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Quotient truncated toward zero, remainder with the dividend's sign.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw internal_error("division by zero");
    if (a.sign_ == 0) return {BigInt(), BigInt()};
    auto [qm, rm] = mag_divmod(a.mag_, b.mag_);
    BigInt q, r;
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
    return {q, r};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    return divmod(a, b).first;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    return divmod(a, b).second;
  }

  // Division that must leave no remainder.
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw internal_error("inexact integer division");
    return q;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = mag_cmp(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  static BigInt gcd(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    if (a.mag_.size() <= 2 && b.mag_.size() <= 2)
      return BigInt(static_cast<long long>(
          std::gcd(to_u64(a.mag_), to_u64(b.mag_))));
    BigInt x = a.abs(), y = b.abs();
    while (!y.is_zero()) {
      BigInt r = x % y;
      x = std::move(y);
      y = std::move(r);
    }
    return x;
  }

  BigInt pow(unsigned e) const {
    BigInt base = *this, acc = 1;
    while (e != 0) {
      if (e & 1u) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = m.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | m[i];
        m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!m.empty() && m.back() == 0) m.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  // Exact conversion; throws if the value does not fit.
  long long to_long_long() const {
    if (mag_.size() > 2) throw internal_error("BigInt too large for long long");
    unsigned long long u = to_u64(mag_);
    if (sign_ >= 0) {
      if (u > 0x7fffffffffffffffull)
        throw internal_error("BigInt too large for long long");
      return static_cast<long long>(u);
    }
    if (u > 0x8000000000000000ull)
      throw internal_error("BigInt too large for long long");
    return -static_cast<long long>(u - 1) - 1;
  }

 private:
  using Mag = std::vector<std::uint32_t>;

  static std::uint64_t to_u64(const Mag& m) {
    std::uint64_t v = 0;
    if (m.size() > 1) v = static_cast<std::uint64_t>(m[1]) << 32;
    if (!m.empty()) v |= m[0];
    return v;
  }

  static void trim(Mag& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
  }

  static int mag_cmp(const Mag& a, const Mag& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static Mag mag_add(const Mag& a, const Mag& b) {
    const Mag& lo = a.size() < b.size() ? a : b;
    const Mag& hi = a.size() < b.size() ? b : a;
    Mag r = hi;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t s = carry + r[i] + (i < lo.size() ? lo[i] : 0);
      r[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
      if (carry == 0 && i >= lo.size()) break;
    }
    if (carry != 0) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires a >= b.
  static Mag mag_sub(const Mag& a, const Mag& b) {
    Mag r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t d = static_cast<std::int64_t>(r[i]) - borrow -
                       (i < b.size() ? b[i] : 0);
      borrow = d < 0 ? 1 : 0;
      if (d < 0) d += 1ll << 32;
      r[i] = static_cast<std::uint32_t>(d);
      if (borrow == 0 && i >= b.size()) break;
    }
    trim(r);
    return r;
  }

  static Mag mag_mul(const Mag& a, const Mag& b) {
    Mag r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] +
                            r[i + j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] += static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
  }

  // Binary long division on magnitudes.
  static std::pair<Mag, Mag> mag_divmod(const Mag& a, const Mag& b) {
    if (mag_cmp(a, b) < 0) return {Mag{}, a};
    if (a.size() <= 2 && b.size() <= 2) {
      std::uint64_t ua = to_u64(a), ub = to_u64(b);
      return {from_u64(ua / ub), from_u64(ua % ub)};
    }
    std::size_t bits = a.size() * 32;
    Mag q(a.size(), 0), rem;
    for (std::size_t k = bits; k-- > 0;) {
      // rem = rem * 2 + bit k of a
      std::uint32_t carry = (a[k / 32] >> (k % 32)) & 1u;
      for (std::size_t i = 0; i < rem.size(); ++i) {
        std::uint32_t next = rem[i] >> 31;
        rem[i] = (rem[i] << 1) | carry;
        carry = next;
      }
      if (carry != 0) rem.push_back(carry);
      if (mag_cmp(rem, b) >= 0) {
        rem = mag_sub(rem, b);
        q[k / 32] |= 1u << (k % 32);
      }
    }
    trim(q);
    trim(rem);
    return {q, rem};
  }

  static Mag from_u64(std::uint64_t v) {
    Mag m;
    while (v != 0) {
      m.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      v >>= 32;
    }
    return m;
  }

  static void mul_small(Mag& m, std::uint32_t f) {
    std::uint64_t carry = 0;
    for (auto& limb : m) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) m.push_back(static_cast<std::uint32_t>(carry));
  }

  static void add_small(Mag& m, std::uint32_t v) {
    std::uint64_t carry = v;
    for (std::size_t i = 0; carry != 0 && i < m.size(); ++i) {
      std::uint64_t cur = m[i] + carry;
      m[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry != 0) m.push_back(static_cast<std::uint32_t>(carry));
  }

  int sign_ = 0;
  Mag mag_;
};

inline BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= BigInt(k);
  return r;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = BigInt::exact_div(r * BigInt(n - k + i), BigInt(i));
  return r;
}

}  // namespace ncpark
