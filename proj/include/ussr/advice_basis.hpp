#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ussr/dyadic.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance.hpp"
#include "ussr/linalg.hpp"
#include "ussr/numbers.hpp"
#include "ussr/oracle.hpp"

namespace ussr {

/// Stored approximation of a basis value: v_i ~ (beta_num / 2^P_mant) * 2^-e
/// with the mantissa beta = beta_num / 2^P_mant in [1, 2) and
/// |v_i * 2^e - beta| <= 2^-P_mant.
struct BasisValue {
  BigInt beta_num;
  std::int64_t e = 0;

  bool operator==(const BasisValue&) const = default;
};

/// The lightest basis of a coefficient domain: the m+1 linearly independent
/// in-domain vectors of smallest positive value, ordered by increasing value,
/// together with dyadic approximations of those values and (optionally) the
/// exact inverse of the basis matrix.
struct BasisAdvice {
  DomainSpec domain;
  std::int64_t p_mant = 0;
  std::int64_t p_drop = 0;
  std::vector<std::vector<std::int64_t>> rows;  // lightest first
  std::vector<BasisValue> values;               // empty until approx_values
  std::optional<RatMat> inverse;                // rows-as-matrix * inverse == I

  RatMat row_matrix() const {
    RatMat m(rows.size(), RatVec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) m[i][j] = Rational(rows[i][j]);
    return m;
  }
};

struct BasisSearchReport {
  DomainSpec domain;
  std::int64_t positive_count = 0;    // t = |W|
  std::int64_t examined = 0;          // total vectors enumerated
  std::int64_t skipped_dependent = 0; // positive vectors rejected for dependence
};

/// Coordinates of an instance in the basis: delta = sum_i c[i] * row_i
/// exactly, m1 the largest index with c != 0, m0 the start of the kept
/// window (smallest index with e_m0 - e_m1 <= P_drop).
struct BasisCoordinates {
  RatVec c;
  std::size_t m1 = 0;
  std::size_t m0 = 0;
};

/// Default mantissa/drop precision: P* = m^2 + ceil(log2(4 (m+1) (m+1)! B^(m+1))).
/// With P_mant = P_drop = P*, the decision error stays below
/// 2^-e_m1 * 2^(-m^2+2) and can never reach the instance value.
inline std::int64_t default_basis_precision(const DomainSpec& dom) {
  dom.validate();
  const std::int64_t m = square_free_count(dom.k) - 1;
  BigInt factorial = 1;
  for (std::int64_t i = 2; i <= m + 1; ++i) factorial *= i;
  const BigInt magnitude =
      BigInt(4) * (m + 1) * factorial * pow_int(BigInt(dom.B), static_cast<std::uint64_t>(m + 1));
  return m * m + ceil_log2(magnitude);
}

namespace detail {

inline bool value_less(std::int64_t k, const SquareFreeBasis& basis,
                       const std::vector<std::int64_t>& a,
                       const std::vector<std::int64_t>& b) {
  UUSSRInstance diff;
  diff.k = k;
  diff.basis = basis;
  diff.delta.resize(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) diff.delta[j] = a[j] - b[j];
  if (diff.all_zero()) return false;
  return sign_exact(diff) < 0;
}

}  // namespace detail

/// Greedy construction of the lightest basis: collect the positive-value
/// vectors W, order them by exact value (sign comparisons on difference
/// vectors, which are nonzero integer vectors and so never tie), and take
/// the first m+1 linearly independent ones. The unit vectors lie in W, so
/// the greedy pass always completes.
inline std::pair<BasisAdvice, BasisSearchReport> lightest_basis(
    const DomainSpec& dom, std::int64_t enum_cap = kDefaultEnumerationCap) {
  dom.validate();
  DomainEnumerator en(dom, enum_cap);
  const SquareFreeBasis& basis = en.basis();
  const std::size_t n = basis.size();

  BasisSearchReport report;
  report.domain = dom;
  std::vector<std::vector<std::int64_t>> positive;
  while (auto inst = en.next()) {
    ++report.examined;
    if (inst->all_zero()) continue;
    if (sign_exact(*inst) > 0) positive.push_back(std::move(inst->delta));
  }
  report.positive_count = static_cast<std::int64_t>(positive.size());

  std::sort(positive.begin(), positive.end(),
            [&](const auto& a, const auto& b) { return detail::value_less(dom.k, basis, a, b); });

  BasisAdvice adv;
  adv.domain = dom;
  adv.p_mant = adv.p_drop = default_basis_precision(dom);
  RowSpace space(n);
  for (const auto& row : positive) {
    if (adv.rows.size() == n) break;
    if (space.try_add(row))
      adv.rows.push_back(row);
    else
      ++report.skipped_dependent;
  }
  if (adv.rows.size() != n)
    throw Error("lightest_basis: greedy pass ended short of a full basis");
  return {std::move(adv), report};
}

/// Fill in the (beta, e) approximations: refine an enclosure of each basis
/// value until it fixes the binade (e is the unique integer with
/// v * 2^e in [1, 2)) and is tight enough to round the mantissa to the
/// 2^-P_mant grid within the accuracy contract.
inline BasisAdvice approx_values(BasisAdvice adv) {
  const SquareFreeBasis basis = square_free_basis(adv.domain.k);
  adv.values.clear();
  adv.values.reserve(adv.rows.size());
  for (const auto& row : adv.rows) {
    UUSSRInstance inst;
    inst.k = adv.domain.k;
    inst.basis = basis;
    inst.delta = row;
    BasisValue value;
    for (std::int64_t p = 64;; p *= 2) {
      if (p > (std::int64_t{1} << 24))
        throw ResourceLimitError("approx_values: enclosure refinement exceeded its cap");
      const DyadicInterval enc = eval_interval(inst, p);
      if (enc.lo.sign() <= 0) continue;
      if (!enc.is_point() && dyadic_floor_log2(enc.lo) != dyadic_floor_log2(enc.hi))
        continue;  // straddles a binade boundary; basis values are never
                   // powers of two unless exact, so this settles
      value.e = -dyadic_floor_log2(enc.lo);
      if (!enc.is_point() &&
          Dyadic(1, -value.e - adv.p_mant - 2) < enc.width())
        continue;
      const Dyadic mid = enc.lo + Dyadic(enc.width().man, enc.width().exp - 1);
      const Dyadic scaled_mantissa = Dyadic(1, value.e + adv.p_mant) * mid;
      value.beta_num = dyadic_round_nearest(scaled_mantissa);
      const BigInt floor_beta = BigInt(1) << adv.p_mant;
      const BigInt ceil_beta = (BigInt(1) << (adv.p_mant + 1)) - 1;
      value.beta_num = std::max(floor_beta, std::min(ceil_beta, value.beta_num));
      break;
    }
    adv.values.push_back(std::move(value));
  }
  return adv;
}

/// Attach the exact inverse of the basis matrix, letting the decider skip
/// elimination entirely.
inline BasisAdvice with_inverse(BasisAdvice adv) {
  auto inv = inverse(adv.row_matrix());
  if (!inv) throw Error("with_inverse: basis matrix is singular");
  adv.inverse = std::move(*inv);
  return adv;
}

/// Full synthesis pipeline for a domain.
inline std::pair<BasisAdvice, BasisSearchReport> synth_basis(
    const DomainSpec& dom, std::int64_t enum_cap = kDefaultEnumerationCap) {
  auto [adv, report] = lightest_basis(dom, enum_cap);
  adv = with_inverse(approx_values(std::move(adv)));
  return {std::move(adv), report};
}

namespace detail {

inline void check_basis_domain(const UUSSRInstance& inst, const BasisAdvice& adv) {
  if (inst.k != adv.domain.k)
    throw DomainError("basis advice: instance k does not match the advice domain");
  if (inst.max_abs_delta() > adv.domain.B)
    throw DomainError("basis advice: coefficient outside the advice domain");
}

}  // namespace detail

/// Exact coordinates of the instance in the lightest basis, via the stored
/// inverse when present, else by rational elimination.
inline BasisCoordinates express_in_basis(const UUSSRInstance& inst, const BasisAdvice& adv) {
  detail::check_basis_domain(inst, adv);
  if (inst.all_zero())
    throw DomainError("express_in_basis: the zero vector has no basis expression");
  if (adv.values.size() != adv.rows.size())
    throw DomainError("express_in_basis: advice is missing its value approximations");
  const std::size_t n = adv.rows.size();

  BasisCoordinates coords;
  if (adv.inverse) {
    // delta = sum_i c_i row_i means (rows^T) c = delta, so c = inverse^T delta.
    coords.c.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        coords.c[i] += (*adv.inverse)[j][i] * Rational(inst.delta[j]);
  } else {
    RatVec rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = Rational(inst.delta[j]);
    auto solved = solve_linear(transpose(adv.row_matrix()), std::move(rhs));
    if (!solved) throw Error("express_in_basis: basis matrix is singular");
    coords.c = std::move(*solved);
  }

  coords.m1 = n;
  for (std::size_t i = n; i-- > 0;)
    if (coords.c[i] != 0) {
      coords.m1 = i;
      break;
    }
  if (coords.m1 == n) throw Error("express_in_basis: zero coordinates for nonzero instance");
  coords.m0 = 0;
  while (adv.values[coords.m0].e - adv.values[coords.m1].e > adv.p_drop) ++coords.m0;
  return coords;
}

/// Truncated-window decision: sign of
///   V~ = sum_{i=m0}^{m1} c_i * beta_i * 2^-e_i
/// in exact rational arithmetic. Terms before m0 are dropped; their values
/// are below 2^(-e_m1 - P_drop) each, and with P_mant = P_drop = P* the
/// total truncation-plus-drop error stays below v_m1, which the instance
/// value strictly dominates, so the computed sign is the exact one.
inline int decide_basis(const UUSSRInstance& inst, const BasisAdvice& adv) {
  detail::check_basis_domain(inst, adv);
  if (inst.all_zero()) return 0;
  const BasisCoordinates coords = express_in_basis(inst, adv);
  Rational v = 0;
  for (std::size_t i = coords.m0; i <= coords.m1; ++i) {
    if (coords.c[i] == 0) continue;
    v += coords.c[i] * Rational(adv.values[i].beta_num) *
         pow2_rational(-adv.p_mant - adv.values[i].e);
  }
  return sign_of(v);
}

struct Prop6Report {
  std::int64_t checked = 0;
  std::int64_t skipped_multiples = 0;
  std::vector<std::vector<std::int64_t>> violations;
};

/// Exhaustive check of the lower bound |value| > v_m1 for every nonzero
/// in-domain vector that is not a scalar multiple of a basis row; multiples
/// give |value| = |c| * v_m1 >= v_m1 instead and are verified separately.
inline Prop6Report verify_prop6(const DomainSpec& dom, const BasisAdvice& adv,
                                std::int64_t enum_cap = kDefaultEnumerationCap) {
  dom.validate();
  if (dom.k != adv.domain.k || dom.B > adv.domain.B)
    throw DomainError("verify_prop6: domain not covered by the advice");
  Prop6Report report;
  DomainEnumerator en(dom, enum_cap);
  while (auto inst = en.next()) {
    if (inst->all_zero()) continue;
    const BasisCoordinates coords = express_in_basis(*inst, adv);
    std::size_t nonzero = 0;
    for (const Rational& ci : coords.c)
      if (ci != 0) ++nonzero;
    if (nonzero == 1) {
      // Scalar multiple of a basis row: the multiplier is a nonzero integer
      // (basis rows are primitive), so |value| >= v_m1 holds with equality
      // exactly at |c| = 1.
      ++report.skipped_multiples;
      const Rational& ci = coords.c[coords.m1];
      if (denominator(ci) != 1 || abs(numerator(ci)) < 1)
        report.violations.push_back(inst->delta);
      continue;
    }
    ++report.checked;
    const int sign = sign_exact(*inst);
    UUSSRInstance diff = *inst;
    for (std::size_t j = 0; j < diff.size(); ++j)
      diff.delta[j] = sign * diff.delta[j] - adv.rows[coords.m1][j];
    if (sign_exact(diff) <= 0) report.violations.push_back(inst->delta);
  }
  return report;
}

}  // namespace ussr
