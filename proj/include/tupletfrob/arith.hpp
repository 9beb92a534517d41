#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "tupletfrob/error.hpp"

namespace tupletfrob {

using i64 = std::int64_t;
__extension__ typedef __int128 i128;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit addition");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit subtraction");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "64-bit multiplication");
  return r;
}

inline i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::Overflow, "value exceeds 64 bits");
  return static_cast<i64>(v);
}

// Floor-style modulus: result always in [0, m).
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// Exact rational number num/den with den > 0 and gcd(num, den) = 1.
/// Intermediate products are formed in 128 bits; results that do not fit
/// 64 bits after reduction raise Errc::Overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 num, i64 den) { assign(num, den); }

  i64 num() const noexcept { return num_; }
  i64 den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from_wide(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(Errc::InvalidArgument, "division by zero");
    return from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return from_wide(-i128(num_), den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;
  /// Inverse of str(); throws InvalidArgument on malformed text.
  static Rational parse(const std::string& text);

 private:
  static Rational from_wide(i128 num, i128 den);
  void assign(i64 num, i64 den) { *this = from_wide(num, den); }

  i64 num_ = 0;
  i64 den_ = 1;
};

}  // namespace tupletfrob
