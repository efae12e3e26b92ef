#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ussr/dyadic.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance.hpp"
#include "ussr/linalg.hpp"
#include "ussr/min_gap.hpp"
#include "ussr/numbers.hpp"
#include "ussr/oracle.hpp"
#include "ussr/simplex.hpp"

namespace ussr {

enum class LtfMethod { round, lp };

inline std::string ltf_method_name(LtfMethod m) {
  return m == LtfMethod::round ? "round" : "lp";
}

/// Integer weights u realizing the sign function on a coefficient domain:
/// for every nonzero delta in [-B, B]^(m+1),
/// sign(sum_j delta_j u_j) = sign(sum_j delta_j sqrt(s_j)).
struct LtfAdvice {
  DomainSpec domain;
  std::vector<BigInt> weights;
  LtfMethod method = LtfMethod::round;

  // Provenance: the scale-and-round run keeps the gap enclosure and the
  // scaling factor; the LP run keeps the tight constraints of the vertex.
  std::optional<DyadicInterval> eps_min;
  BigInt lambda = 0;
  std::vector<std::vector<std::int64_t>> tight_constraints;
};

/// Scale-and-round synthesis: with eps_min the least nonzero |value| on the
/// domain and lambda = ceil(2(m+1)B / eps_min), the weights
/// u_0 = lambda, u_j = nearest-integer(lambda * sqrt(s_j)) satisfy
///   |sum delta_j u_j - lambda * value| <= (m+1)B/2 < lambda * eps_min / 2
///                                      <= lambda * |value|
/// for every nonzero in-domain delta, so no sign can flip.
inline LtfAdvice synth_round(const DomainSpec& dom,
                             std::int64_t enum_cap = kDefaultEnumerationCap) {
  dom.validate();
  const MinGap gap = min_gap(dom, enum_cap);
  const Dyadic eps_lo = gap.enclosure.lo;  // positive by min_gap's contract

  LtfAdvice adv;
  adv.domain = dom;
  adv.method = LtfMethod::round;
  adv.eps_min = gap.enclosure;

  const SquareFreeBasis basis = square_free_basis(dom.k);
  const BigInt numer = BigInt(2) * static_cast<std::int64_t>(basis.size()) * dom.B;
  // ceil(numer / (man * 2^exp)) in integer arithmetic
  adv.lambda = eps_lo.exp <= 0 ? ceil_div(numer << (-eps_lo.exp), eps_lo.man)
                               : ceil_div(numer, eps_lo.man << eps_lo.exp);

  adv.weights.resize(basis.size());
  adv.weights[0] = adv.lambda;  // sqrt(1) scales exactly
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::int64_t p = ceil_log2(adv.lambda) + 8;; p *= 2) {
      const DyadicInterval scaled = adv.lambda * sqrt_interval(basis.elements[j], p);
      const BigInt lo_rounded = dyadic_round_nearest(scaled.lo);
      const BigInt hi_rounded = dyadic_round_nearest(scaled.hi);
      if (lo_rounded == hi_rounded) {
        adv.weights[j] = lo_rounded;
        break;
      }
      // Enclosure straddles a half-integer; sqrt(s_j) is irrational for
      // s_j > 1, so a finer enclosure settles it.
      if (p > (std::int64_t{1} << 20))
        throw Error("synth_round: rounding failed to settle");
    }
  }
  return adv;
}

/// LP synthesis: solve, in exact rationals, min sum z_j subject to
/// <delta, z> >= 1 for every positive-sign delta in the domain (the
/// negative-sign constraints <delta, z> <= -1 are the same inequalities
/// mirrored). An optimal basic feasible solution is a vertex; scaling by
/// the lcm of denominators yields the integer weights.
inline LtfAdvice synth_lp(const DomainSpec& dom, std::int64_t max_constraints = 10'000,
                          std::int64_t enum_cap = kDefaultEnumerationCap) {
  dom.validate();
  DomainEnumerator en(dom, enum_cap);
  std::vector<std::vector<std::int64_t>> positive;  // W: one row per sign pair
  while (auto inst = en.next()) {
    if (inst->all_zero()) continue;
    if (sign_exact(*inst) > 0) positive.push_back(inst->delta);
    if (static_cast<std::int64_t>(positive.size()) > max_constraints)
      throw ResourceLimitError("synth_lp: constraint count exceeds cap of " +
                               std::to_string(max_constraints));
  }

  const std::size_t n = square_free_basis(dom.k).size();
  RatMat a(positive.size(), RatVec(n));
  for (std::size_t i = 0; i < positive.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(positive[i][j]);
  const RatVec b(positive.size(), Rational(1));
  const RatVec c(n, Rational(1));

  const LpSolution sol = solve_lp_min(a, b, c);
  if (sol.status != LpStatus::optimal)
    throw Error("synth_lp: the realization LP is feasible and bounded by construction");

  BigInt scale = 1;
  for (const Rational& z : sol.x) scale = lcm(scale, denominator(z));

  LtfAdvice adv;
  adv.domain = dom;
  adv.method = LtfMethod::lp;
  adv.weights.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    adv.weights[j] = numerator(sol.x[j]) * (scale / denominator(sol.x[j]));

  // Certificate: the first m+1 linearly independent constraints tight at the
  // vertex.
  RowSpace space(n);
  for (const auto& row : positive) {
    Rational dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += Rational(row[j]) * sol.x[j];
    if (dot == 1 && space.try_add(row)) {
      adv.tight_constraints.push_back(row);
      if (space.rank() == n) break;
    }
  }
  if (adv.tight_constraints.size() != n)
    throw Error("synth_lp: optimal solution is not a vertex");
  return adv;
}

/// Decide an in-domain instance from the advice alone: the zero test plus
/// one integer inner product.
inline int decide_ltf(const UUSSRInstance& inst, const LtfAdvice& adv) {
  if (inst.k != adv.domain.k)
    throw DomainError("decide_ltf: instance k does not match the advice domain");
  if (inst.max_abs_delta() > adv.domain.B)
    throw DomainError("decide_ltf: coefficient outside the advice domain");
  if (inst.all_zero()) return 0;
  BigInt dot = 0;
  for (std::size_t j = 0; j < inst.size(); ++j) dot += BigInt(inst.delta[j]) * adv.weights[j];
  return sign_of(dot);
}

}  // namespace ussr
