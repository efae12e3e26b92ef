#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ussr/dyadic.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance.hpp"
#include "ussr/numbers.hpp"

namespace ussr {

/// Enclosure of sqrt(n) of width <= 2^-p: with r = floor(sqrt(n * 4^p)),
/// the root lies in [r, r+1] * 2^-p, and exactly on r for perfect squares.
/// Enclosures at higher p are nested inside lower-p ones.
inline DyadicInterval sqrt_interval(std::int64_t n, std::int64_t p) {
  if (n < 1) throw DomainError("sqrt_interval: n must be a positive integer");
  if (p < 1) throw DomainError("sqrt_interval: precision must be >= 1 bit");
  const BigInt scaled = BigInt(n) << (2 * p);
  const BigInt r = isqrt_floor(scaled);
  const Dyadic lo(r, -p);
  if (r * r == scaled) return DyadicInterval::point(lo);
  return DyadicInterval(lo, Dyadic(r + 1, -p));
}

namespace detail {

/// Memoized root enclosures. Adaptive sign evaluation and exhaustive
/// verification hit the same (n, p) pairs constantly; the working set stays
/// tiny because n <= k and p follows a doubling schedule.
inline const DyadicInterval& cached_sqrt(std::int64_t n, std::int64_t p) {
  thread_local std::map<std::pair<std::int64_t, std::int64_t>, DyadicInterval> cache;
  auto [it, inserted] = cache.try_emplace({n, p});
  if (inserted) it->second = sqrt_interval(n, p);
  return it->second;
}

}  // namespace detail

/// Enclosure of sum_j delta_j * sqrt(s_j) with every root enclosed to
/// width 2^-p; total width <= (m+1) * max|delta_j| * 2^-p. Exact dyadic
/// sums add no width of their own.
inline DyadicInterval eval_interval(const UUSSRInstance& inst, std::int64_t p) {
  if (p < 1) throw DomainError("eval_interval: precision must be >= 1 bit");
  DyadicInterval acc = DyadicInterval::zero();
  for (std::size_t j = 0; j < inst.size(); ++j) {
    const std::int64_t d = inst.delta[j];
    if (d == 0) continue;
    acc = acc + BigInt(d) * detail::cached_sqrt(inst.basis.elements[j], p);
  }
  return acc;
}

namespace detail {

/// N = sum_j |delta_j| * ceil(sqrt(s_j)) bounds the magnitude of every
/// conjugate of the instance value under sign flips of its radical terms.
inline BigInt conjugate_magnitude_bound(const UUSSRInstance& inst) {
  BigInt n = 0;
  for (std::size_t j = 0; j < inst.size(); ++j) {
    if (inst.delta[j] == 0) continue;
    n += BigInt(inst.delta[j] < 0 ? -inst.delta[j] : inst.delta[j]) *
         isqrt_ceil(BigInt(inst.basis.elements[j]));
  }
  return n;
}

inline std::int64_t radical_support(const UUSSRInstance& inst) {
  std::int64_t count = 0;
  for (std::size_t j = 1; j < inst.size(); ++j)
    if (inst.delta[j] != 0) ++count;
  return count;
}

/// Exponent e such that 2^-e lower-bounds |value|: the value is an algebraic
/// integer whose conjugates flip the radical terms' signs; the product of
/// all d = 2^m' conjugates is a nonzero rational integer, and each conjugate
/// is at most N in magnitude, so |value| >= 1 / N^(d-1) >= 2^-e.
inline BigInt separation_exponent(const UUSSRInstance& inst) {
  const BigInt n = conjugate_magnitude_bound(inst);
  const std::int64_t support = radical_support(inst);
  const BigInt d_minus_1 = (BigInt(1) << support) - 1;
  if (n <= 1) return 0;  // pure-integer instances are separated by 1
  return d_minus_1 * ceil_log2(n);
}

}  // namespace detail

/// Positive dyadic L with |sum_j delta_j sqrt(s_j)| >= L, from the conjugate
/// norm bound L = 2^-((d-1) * ceil(log2 N)).
inline Dyadic value_lower_bound(const UUSSRInstance& inst) {
  if (inst.all_zero()) throw DomainError("value_lower_bound: zero instance has no bound");
  const BigInt e = detail::separation_exponent(inst);
  return Dyadic(1, -to_int64(e, "separation exponent"));
}

/// Precision at which the evaluation interval is certified to exclude zero
/// for a nonzero instance: width <= (m+1) max|delta| 2^-p < 2^-e <= |value|.
inline BigInt certified_sign_bits(const UUSSRInstance& inst) {
  if (inst.all_zero()) throw DomainError("certified_sign_bits: zero instance");
  const BigInt spread = BigInt(static_cast<std::int64_t>(inst.size())) * inst.max_abs_delta();
  return ceil_log2(spread) + detail::separation_exponent(inst) + 1;
}

struct SignDecision {
  int sign = 0;
  std::int64_t bits_used = 0;  // 0 when the zero test alone decided
  BigInt certified_bits = 0;
};

/// Exact sign of the instance value. The zero test is algebraic (zero iff
/// the coefficient vector vanishes); nonzero values are decided by interval
/// evaluation at doubling precision, with termination certified by
/// certified_sign_bits. A caller-supplied cap replaces the default cap of
/// 4x the certified precision; exceeding either raises ResourceLimitError.
inline SignDecision sign_exact_stats(const UUSSRInstance& inst,
                                     std::optional<std::int64_t> max_bits = std::nullopt) {
  if (inst.all_zero()) return {0, 0, 0};
  SignDecision result;
  result.certified_bits = certified_sign_bits(inst);
  const BigInt cap = max_bits ? BigInt(*max_bits) : 4 * result.certified_bits;
  if (cap < 1) throw ResourceLimitError("sign_exact: precision cap below 1 bit");
  for (BigInt p = 64;; p <<= 1) {
    const BigInt effective = p < cap ? p : cap;
    const std::int64_t bits = to_int64(effective, "oracle precision");
    const int sign = eval_interval(inst, bits).sign();
    if (sign != 0) {
      result.sign = sign;
      result.bits_used = bits;
      return result;
    }
    if (effective == cap)
      throw ResourceLimitError("sign_exact: undecided at the precision cap of " +
                               cap.str() + " bits");
  }
}

inline int sign_exact(const UUSSRInstance& inst,
                      std::optional<std::int64_t> max_bits = std::nullopt) {
  return sign_exact_stats(inst, max_bits).sign;
}

/// Exact value comparison of two instances over the same k:
/// sign of (value(a) - value(b)).
inline int compare_values(const UUSSRInstance& a, const UUSSRInstance& b) {
  if (a.k != b.k) throw DomainError("compare_values: instances disagree on k");
  UUSSRInstance diff = a;
  for (std::size_t j = 0; j < diff.size(); ++j) diff.delta[j] -= b.delta[j];
  return sign_exact(diff);
}

// --- integer polynomials and algebraic bounds -------------------------------

/// Integer polynomial, constant coefficient first.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

  void trim() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  bool is_zero_poly() const { return coeffs.empty(); }
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs.size()) - 1; }

  /// size(P) = sum of |coefficients|.
  BigInt size() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs) s += abs(c);
    return s;
  }

  /// Horner evaluation over an interval enclosure of the argument.
  DyadicInterval eval(const DyadicInterval& x) const {
    DyadicInterval acc = DyadicInterval::zero();
    for (std::size_t i = coeffs.size(); i-- > 0;)
      acc = acc * x + DyadicInterval::point(Dyadic::from_int(coeffs[i]));
    return acc;
  }

  bool operator==(const IntPolynomial& other) const { return coeffs == other.coeffs; }
};

namespace detail {

/// Element of the ring Z[sqrt(s) : s square-free], stored as a map from the
/// square-free radicand to its integer coefficient (radicand 1 is the
/// rational part). Products use sqrt(a)sqrt(b) = g * sqrt(ab/g^2), g = gcd.
using RadicalElem = std::map<std::int64_t, BigInt>;

inline void radical_add(RadicalElem& acc, std::int64_t radicand, const BigInt& coeff) {
  if (coeff.is_zero()) return;
  BigInt& slot = acc[radicand];
  slot += coeff;
  if (slot.is_zero()) acc.erase(radicand);
}

inline RadicalElem radical_mul(const RadicalElem& a, const RadicalElem& b) {
  RadicalElem out;
  for (const auto& [ra, ca] : a)
    for (const auto& [rb, cb] : b) {
      const std::int64_t g = std::gcd(ra, rb);
      radical_add(out, (ra / g) * (rb / g), ca * cb * g);
    }
  return out;
}

using RadicalPoly = std::vector<RadicalElem>;  // constant term first

inline RadicalPoly radical_poly_mul(const RadicalPoly& a, const RadicalPoly& b) {
  RadicalPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const RadicalElem prod = radical_mul(a[i], b[j]);
      for (const auto& [r, c] : prod) radical_add(out[i + j], r, c);
    }
  return out;
}

}  // namespace detail

/// Monic integer polynomial vanishing at the instance value: the product of
/// (x - delta_0 - sum_j eps_j delta_j sqrt(s_j)) over all sign patterns eps
/// of the nonzero radical terms. Degree is 2^m' for m' nonzero radical
/// coefficients; the expansion is exact in the radical ring and the final
/// coefficients are plain integers because the sign orbit is symmetric.
inline IntPolynomial annihilating_poly(const UUSSRInstance& inst,
                                       std::int64_t max_radicals = 6) {
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < inst.size(); ++j)
    if (inst.delta[j] != 0) support.push_back(j);
  const std::size_t mprime = support.size();
  if (static_cast<std::int64_t>(mprime) > max_radicals)
    throw ResourceLimitError("annihilating_poly: " + std::to_string(mprime) +
                             " radical terms exceed the cap of " +
                             std::to_string(max_radicals));

  detail::RadicalPoly product{detail::RadicalElem{{1, BigInt(1)}}};  // the constant 1
  const std::size_t patterns = std::size_t{1} << mprime;
  for (std::size_t eps = 0; eps < patterns; ++eps) {
    detail::RadicalElem root;
    detail::radical_add(root, 1, BigInt(inst.delta[0]));
    for (std::size_t t = 0; t < mprime; ++t) {
      const std::size_t j = support[t];
      const std::int64_t flip = (eps >> t) & 1u ? -1 : 1;
      detail::radical_add(root, inst.basis.elements[j], BigInt(flip * inst.delta[j]));
    }
    // factor (x - root)
    detail::RadicalPoly factor(2);
    for (const auto& [r, c] : root) detail::radical_add(factor[0], r, -c);
    detail::radical_add(factor[1], 1, BigInt(1));
    product = detail::radical_poly_mul(product, factor);
  }

  std::vector<BigInt> coeffs(product.size());
  for (std::size_t i = 0; i < product.size(); ++i) {
    for (const auto& [r, c] : product[i]) {
      if (r != 1)
        throw Error("annihilating_poly: irrational coefficient survived expansion");
      coeffs[i] = c;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

/// Root-separation lower bound sqrt(3) / (n^(n/2+1) * s^(n-1)) as an exact
/// rational under-approximation: sqrt(3) -> 433/250 and n^(n/2+1) is rounded
/// up through ceil(sqrt(n^(n+2))), which is exact for even degrees.
inline Rational mahler_sep(const IntPolynomial& poly) {
  const std::int64_t n = poly.degree();
  if (n < 2) throw DomainError("mahler_sep: degree must be at least 2");
  const BigInt s = poly.size();
  const BigInt half_power = isqrt_ceil(pow_int(BigInt(n), static_cast<std::uint64_t>(n + 2)));
  return Rational(433, 250 * half_power * pow_int(s, static_cast<std::uint64_t>(n - 1)));
}

}  // namespace ussr
