#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "vglab/error.hpp"

namespace vglab {

/// Exact rational with one extra point at infinity.
///
/// Invariants: den > 0 and gcd(|num|, den) == 1; infinity is stored as 1/0.
/// All arithmetic is exact; intermediate products go through 128-bit
/// integers and overflow of the reduced result raises an error instead of
/// wrapping.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  static Rat infinity() {
    Rat r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  /// Accepts "p", "p/q", and "inf".
  static Rat parse(std::string_view text);

  bool is_inf() const { return den_ == 0; }
  long long num() const { return num_; }
  long long den() const { return den_; }

  std::string str() const {
    if (is_inf()) return "inf";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rat& a, const Rat& b) = default;

  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.is_inf() || b.is_inf()) {
      if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
      return a.is_inf() ? std::strong_ordering::greater
                        : std::strong_ordering::less;
    }
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
           : l > r ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.is_inf() || b.is_inf()) return infinity();
    return from128(static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }

  /// Finite subtraction; infinite operands are a caller error.
  friend Rat operator-(const Rat& a, const Rat& b) {
    if (a.is_inf() || b.is_inf())
      throw ValidationError("rational subtraction with infinite operand");
    return from128(static_cast<__int128>(a.num_) * b.den_ -
                       static_cast<__int128>(b.num_) * a.den_,
                   static_cast<__int128>(a.den_) * b.den_);
  }

  friend Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_inf() || b.is_inf())
      throw ValidationError("rational multiplication with infinite operand");
    return from128(static_cast<__int128>(a.num_) * b.num_,
                   static_cast<__int128>(a.den_) * b.den_);
  }

  friend Rat operator/(const Rat& a, const Rat& b) {
    if (a.is_inf() || b.is_inf())
      throw ValidationError("rational division with infinite operand");
    if (b.num_ == 0) throw ValidationError("rational division by zero");
    return from128(static_cast<__int128>(a.num_) * b.den_,
                   static_cast<__int128>(a.den_) * b.num_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  static Rat from128(__int128 n, __int128 d);
  void normalize();

  long long num_ = 0;
  long long den_ = 1;
};

/// Truncated subtraction max(a - b, 0); by convention inf - inf = 0 and
/// a - inf = 0, matching the residual of + on the extended half-line.
inline Rat rat_monus(const Rat& a, const Rat& b) {
  if (b.is_inf()) return Rat(0);
  if (a.is_inf()) return Rat::infinity();
  Rat d = a - b;
  return d < Rat(0) ? Rat(0) : d;
}

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline void Rat::normalize() {
  if (den_ == 0) throw ValidationError("rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  num_ /= g;
  den_ /= g;
}

inline Rat Rat::from128(__int128 n, __int128 d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rat(0);
  __int128 an = n < 0 ? -n : n;
  // Euclid on 128-bit values, then check the reduced pair fits in 64 bits.
  __int128 a = an, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  n /= a;
  d /= a;
  constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
  constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
  if (n < lo || n > hi || d > hi)
    throw ValidationError("rational overflow");
  Rat r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

inline Rat Rat::parse(std::string_view text) {
  auto fail = [&](std::size_t pos) -> Rat {
    throw ParseError("malformed rational '" + std::string(text) +
                     "' at position " + std::to_string(pos));
  };
  if (text == "inf") return infinity();
  if (text.empty()) return fail(0);
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-' || text[i] == '+') {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || text[i] < '0' || text[i] > '9') return fail(i);
  long long num = 0;
  for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
    if (num > (INT64_MAX - 9) / 10) return fail(i);
    num = num * 10 + (text[i] - '0');
  }
  long long den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return fail(i);
    ++i;
    if (i >= text.size() || text[i] < '0' || text[i] > '9') return fail(i);
    den = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      if (den > (INT64_MAX - 9) / 10) return fail(i);
      den = den * 10 + (text[i] - '0');
    }
    if (i != text.size()) return fail(i);
    if (den == 0) return fail(i);
  }
  return Rat(neg ? -num : num, den);
}

}  // namespace vglab
