#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

#include "ussr/numbers.hpp"

namespace ussr {

/// Dyadic rational: man * 2^exp with an arbitrary-precision mantissa.
///
/// Every arithmetic operation on dyadics is exact, so intervals built from
/// them never need directed rounding; approximation enters the picture only
/// where a square root is enclosed.
struct Dyadic {
  BigInt man;
  std::int64_t exp = 0;

  Dyadic() : man(0) {}
  Dyadic(BigInt m, std::int64_t e) : man(std::move(m)), exp(e) { canonicalize(); }
  static Dyadic from_int(const BigInt& n) { return Dyadic(n, 0); }

  int sign() const { return man.sign(); }
  bool is_zero() const { return man.is_zero(); }

  // Strip trailing zero bits so mantissas stay as small as the value allows.
  void canonicalize() {
    if (man.is_zero()) {
      exp = 0;
      return;
    }
    const BigInt mag = abs(man);
    const std::int64_t tz = static_cast<std::int64_t>(lsb(mag));
    if (tz > 0) {
      man >>= tz;
      exp += tz;
    }
  }
};

inline Dyadic operator-(const Dyadic& a) { return Dyadic(-a.man, a.exp); }

inline Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t e = std::min(a.exp, b.exp);
  return Dyadic((a.man << (a.exp - e)) + (b.man << (b.exp - e)), e);
}

inline Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

inline Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.man * b.man, a.exp + b.exp);
}

inline Dyadic operator*(const BigInt& c, const Dyadic& a) {
  return Dyadic(c * a.man, a.exp);
}

/// Three-way comparison, exact.
inline int compare(const Dyadic& a, const Dyadic& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  const std::int64_t e = std::min(a.exp, b.exp);
  const BigInt ma = a.man << (a.exp - e);
  const BigInt mb = b.man << (b.exp - e);
  return ma < mb ? -1 : (mb < ma ? 1 : 0);
}

inline bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
inline bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
inline bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
inline bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }
inline bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
inline bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }

inline BigInt dyadic_floor(const Dyadic& a) {
  return a.exp >= 0 ? BigInt(a.man << a.exp) : shift_floor(a.man, -a.exp);
}

/// Nearest integer with half-up ties: floor(a + 1/2).
inline BigInt dyadic_round_nearest(const Dyadic& a) {
  return dyadic_floor(a + Dyadic(1, -1));
}

/// floor(log2 a) for a > 0.
inline std::int64_t dyadic_floor_log2(const Dyadic& a) {
  if (a.sign() <= 0) throw DomainError("dyadic_floor_log2: argument must be positive");
  return static_cast<std::int64_t>(msb(a.man)) + a.exp;
}

inline Rational dyadic_to_rational(const Dyadic& a) {
  return Rational(a.man) * pow2_rational(a.exp);
}

/// Exact decimal rendering (dyadics have finite decimal expansions).
inline std::string dyadic_to_decimal(const Dyadic& a) {
  if (a.is_zero()) return "0";
  if (a.exp >= 0) return BigInt(a.man << a.exp).str();
  const std::int64_t f = -a.exp;
  const bool neg = a.sign() < 0;
  const BigInt mag = abs(a.man);
  const BigInt ipart = mag >> f;
  BigInt frac = mag - (ipart << f);
  std::string out = (neg ? "-" : "") + ipart.str();
  if (!frac.is_zero()) {
    frac *= pow_int(5, static_cast<std::uint64_t>(f));
    std::string digits = frac.str();
    if (static_cast<std::int64_t>(digits.size()) < f)
      digits.insert(0, static_cast<std::size_t>(f) - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

/// Closed interval [lo, hi] of dyadics. The enclosed real value is always
/// contained; interval arithmetic below is exact so containment is preserved
/// without directed rounding.
struct DyadicInterval {
  Dyadic lo, hi;

  DyadicInterval() = default;
  DyadicInterval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw DomainError("DyadicInterval: lo > hi");
  }
  static DyadicInterval point(const Dyadic& v) { return DyadicInterval(v, v); }
  static DyadicInterval zero() { return point(Dyadic()); }

  Dyadic width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const Dyadic& v) const { return lo <= v && v <= hi; }
  bool contains(const DyadicInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }

  /// Sign of every value in the interval: 0 when the interval straddles or
  /// touches zero and is therefore undecided.
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }
};

inline DyadicInterval operator-(const DyadicInterval& a) {
  return DyadicInterval(-a.hi, -a.lo);
}

inline DyadicInterval operator+(const DyadicInterval& a, const DyadicInterval& b) {
  return DyadicInterval(a.lo + b.lo, a.hi + b.hi);
}

inline DyadicInterval operator-(const DyadicInterval& a, const DyadicInterval& b) {
  return a + (-b);
}

inline DyadicInterval operator*(const BigInt& c, const DyadicInterval& a) {
  if (c.sign() >= 0) return DyadicInterval(c * a.lo, c * a.hi);
  return DyadicInterval(c * a.hi, c * a.lo);
}

inline DyadicInterval operator*(const DyadicInterval& a, const DyadicInterval& b) {
  const Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return DyadicInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

inline DyadicInterval abs_interval(const DyadicInterval& a) {
  if (a.lo.sign() >= 0) return a;
  if (a.hi.sign() <= 0) return -a;
  return DyadicInterval(Dyadic(), std::max(-a.lo, a.hi));
}

}  // namespace ussr
