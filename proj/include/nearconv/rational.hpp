#ifndef NEARCONV_RATIONAL_HPP
#define NEARCONV_RATIONAL_HPP

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "types.hpp"

namespace nearconv {

namespace detail {

inline uint128 uabs(int128 v) noexcept {
  return v < 0 ? uint128(0) - uint128(v) : uint128(v);
}

inline uint128 gcd(uint128 a, uint128 b) noexcept {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Full 128x128 -> 256 bit unsigned product as (hi, lo).
inline std::pair<uint128, uint128> mul_wide(uint128 a, uint128 b) noexcept {
  const uint128 mask = (uint128(1) << 64) - 1;
  const uint128 a0 = a & mask, a1 = a >> 64;
  const uint128 b0 = b & mask, b1 = b >> 64;
  const uint128 p00 = a0 * b0;
  const uint128 p01 = a0 * b1;
  const uint128 p10 = a1 * b0;
  const uint128 p11 = a1 * b1;
  const uint128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
  const uint128 lo = (p00 & mask) | (mid << 64);
  const uint128 hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  return {hi, lo};
}

// Three-way comparison of a*b and c*d where b, d > 0.
inline std::strong_ordering compare_products(int128 a, int128 b, int128 c, int128 d) noexcept {
  const bool neg_l = a < 0;
  const bool neg_r = c < 0;
  if (a == 0 && c == 0) return std::strong_ordering::equal;
  if (neg_l != neg_r || a == 0 || c == 0) {
    // Signs differ or one side is zero: the sign of a and c decides.
    const int sl = a < 0 ? -1 : (a > 0 ? 1 : 0);
    const int sr = c < 0 ? -1 : (c > 0 ? 1 : 0);
    return sl <=> sr;
  }
  const auto l = mul_wide(uabs(a), uint128(b));
  const auto r = mul_wide(uabs(c), uint128(d));
  const auto mag = l.first != r.first ? (l.first <=> r.first) : (l.second <=> r.second);
  if (!neg_l) return mag;
  return 0 <=> mag;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational: 128-bit overflow");
  return r;
}

inline int128 floor_div(int128 a, int128 b) noexcept {
  int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  uint128 u = uabs(v);
  std::string s;
  while (u != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

}  // namespace detail

// Exact rational with a 128-bit numerator and positive 128-bit denominator.
// Values are not kept in lowest terms; equality and ordering go through exact
// 256-bit cross products, so unnormalized representations compare correctly.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(int128 value) : num_(value) {}  // NOLINT: implicit from integers
  Rational(int128 num, int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  [[nodiscard]] constexpr int128 num() const noexcept { return num_; }
  [[nodiscard]] constexpr int128 den() const noexcept { return den_; }

  [[nodiscard]] Rational reduced() const {
    const uint128 g = detail::gcd(detail::uabs(num_), uint128(den_));
    if (g <= 1) return *this;
    Rational r;
    r.num_ = num_ / int128(g);
    r.den_ = den_ / int128(g);
    return r;
  }

  [[nodiscard]] int128 floor() const noexcept { return detail::floor_div(num_, den_); }
  [[nodiscard]] int128 ceil() const noexcept { return -detail::floor_div(-num_, den_); }
  [[nodiscard]] bool is_integer() const noexcept { return num_ % den_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return make(detail::checked_add(a.num_, b.num_), a.den_);
    return make(detail::checked_add(detail::checked_mul(a.num_, b.den_), detail::checked_mul(b.num_, a.den_)),
                detail::checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a) { return make(-a.num_, a.den_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, int128 k) { return make(detail::checked_mul(a.num_, k), a.den_); }
  friend Rational operator*(int128 k, const Rational& a) { return a * k; }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(detail::checked_mul(a.num_, b.num_), detail::checked_mul(a.den_, b.den_));
  }
  // Division by a nonzero integer.
  friend Rational operator/(const Rational& a, int128 k) {
    if (k == 0) throw std::domain_error("rational: division by zero");
    return Rational(a.num_, detail::checked_mul(a.den_, k));
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return detail::compare_products(a.num_, b.den_, b.num_, a.den_);
  }
  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }

  [[nodiscard]] std::string str() const {
    const Rational r = reduced();
    if (r.den_ == 1) return detail::to_string(r.num_);
    return detail::to_string(r.num_) + "/" + detail::to_string(r.den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational make(int128 num, int128 den) noexcept {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    return r;
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace nearconv

#endif  // NEARCONV_RATIONAL_HPP
