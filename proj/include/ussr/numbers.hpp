#pragma once

#include <cstdint>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "ussr/errors.hpp"

namespace ussr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& x) { return x.sign(); }
inline int sign_of(const Rational& x) { return numerator(x).sign(); }

/// floor(sqrt(n)) by Newton's iteration. The seed 2^ceil(bits/2) lies above
/// the root, so the iterates decrease monotonically onto it.
inline BigInt isqrt_floor(const BigInt& n) {
  if (n.sign() < 0) throw DomainError("isqrt_floor: negative argument");
  if (n.is_zero()) return 0;
  const std::size_t bits = msb(n) + 1;
  BigInt x = BigInt(1) << ((bits + 1) / 2);
  for (;;) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

inline BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = isqrt_floor(n);
  return r * r == n ? r : r + 1;
}

inline bool is_perfect_square(const BigInt& n) {
  if (n.sign() < 0) return false;
  BigInt r = isqrt_floor(n);
  return r * r == n;
}

/// Index of the highest set bit: floor(log2 n) for n >= 1.
inline std::int64_t floor_log2(const BigInt& n) {
  if (n.sign() <= 0) throw DomainError("floor_log2: argument must be positive");
  return static_cast<std::int64_t>(msb(n));
}

/// Smallest e with n <= 2^e, for n >= 1.
inline std::int64_t ceil_log2(const BigInt& n) {
  if (n.sign() <= 0) throw DomainError("ceil_log2: argument must be positive");
  if (n == 1) return 0;
  return static_cast<std::int64_t>(msb(n - 1)) + 1;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a % b;
  if (!r.is_zero() && ((r.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

/// floor(a / 2^k), exact for negative a as well (plain >> on a negative
/// cpp_int is not a floor shift).
inline BigInt shift_floor(const BigInt& a, std::int64_t k) {
  if (k <= 0) return a << (-k);
  if (a.sign() >= 0) return a >> k;
  return -((-a + ((BigInt(1) << k) - 1)) >> k);
}

inline Rational pow2_rational(std::int64_t e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(1, BigInt(1) << (-e));
}

inline BigInt pow_int(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::int64_t to_int64(const BigInt& n, const char* what = "value") {
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min())
    throw ResourceLimitError(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(n);
}

}  // namespace ussr
