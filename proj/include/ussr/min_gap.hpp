#pragma once

#include <cstdint>
#include <utility>

#include "ussr/instance.hpp"
#include "ussr/oracle.hpp"

namespace ussr {

struct MinGap {
  DyadicInterval enclosure;  // of eps_min = min |value| over nonzero vectors
  UUSSRInstance witness;     // lexicographically smallest achieving vector
};

/// Smallest nonzero |sum_j delta_j sqrt(s_j)| over the domain, located by
/// exact sign comparisons (never by the enclosures), then enclosed to width
/// <= 2^-32 with a positive lower endpoint.
inline MinGap min_gap(const DomainSpec& dom, std::int64_t enum_cap = kDefaultEnumerationCap) {
  DomainEnumerator en(dom, enum_cap);
  bool have_best = false;
  UUSSRInstance best_abs;      // |value| as an instance: sign * delta
  UUSSRInstance best_witness;  // the original vector
  while (auto inst = en.next()) {
    if (inst->all_zero()) continue;
    const int sign = sign_exact(*inst);
    UUSSRInstance abs = *inst;
    if (sign < 0)
      for (std::int64_t& d : abs.delta) d = -d;
    if (!have_best) {
      have_best = true;
      best_abs = std::move(abs);
      best_witness = *inst;
      continue;
    }
    const int cmp = compare_values(abs, best_abs);
    if (cmp < 0 || (cmp == 0 && inst->delta < best_witness.delta)) {
      best_abs = std::move(abs);
      best_witness = *inst;
    }
  }
  if (!have_best) throw DomainError("min_gap: domain has no nonzero vector");

  // Refine the witness's |value| until the enclosure is narrow and positive.
  const Dyadic target_width(1, -32);
  for (std::int64_t p = 64;; p *= 2) {
    DyadicInterval enc = eval_interval(best_abs, p);
    if (enc.lo.sign() > 0 && enc.width() <= target_width)
      return {enc, best_witness};
  }
}

}  // namespace ussr
