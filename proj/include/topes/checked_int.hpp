#pragma once

// Exact 128-bit signed integer for combinatorial counts.  Every arithmetic
// operation is overflow-checked and throws std::overflow_error instead of
// wrapping, so a count that leaves the representable range can never be
// reported silently.  Values serialize as plain decimal strings.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topes {

class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(long long v) : v_(v) {}  // NOLINT: implicit by design
  constexpr CheckedInt(int v) : v_(v) {}        // NOLINT

  static CheckedInt from_string(std::string_view s);

  CheckedInt operator-() const {
    CheckedInt r;
    if (__builtin_sub_overflow(__int128{0}, v_, &r.v_))
      throw std::overflow_error("CheckedInt: negation overflow");
    return r;
  }

  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v_, o.v_, &v_))
      throw std::overflow_error("CheckedInt: addition overflow");
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_))
      throw std::overflow_error("CheckedInt: subtraction overflow");
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_))
      throw std::overflow_error("CheckedInt: multiplication overflow");
    return *this;
  }
  CheckedInt& operator/=(CheckedInt o) {
    if (o.v_ == 0) throw std::domain_error("CheckedInt: division by zero");
    if (o.v_ == -1) return *this = -*this;  // guards INT128_MIN / -1
    v_ /= o.v_;
    return *this;
  }
  CheckedInt& operator%=(CheckedInt o) {
    if (o.v_ == 0) throw std::domain_error("CheckedInt: division by zero");
    if (o.v_ == -1) { v_ = 0; return *this; }
    v_ %= o.v_;
    return *this;
  }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return a /= b; }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) { return a %= b; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(CheckedInt a, CheckedInt b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_ == 0; }
  std::string str() const;

 private:
  __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, const CheckedInt& v);

// Binomial coefficient with the usual zero convention: 0 whenever k < 0 or
// k > n (this also covers negative n).  Exact at every intermediate step.
CheckedInt binomial(long long n, long long k);

}  // namespace topes
