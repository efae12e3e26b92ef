#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ussr/errors.hpp"
#include "ussr/numbers.hpp"
#include "ussr/numtheory.hpp"

namespace ussr {

/// One signed radical term: sign * sqrt(value).
struct Term {
  int sign;            // -1 or +1
  std::int64_t value;  // in [1, k]

  bool operator==(const Term&) const = default;
};

/// Raw signed sum of square roots with terms drawn from [1, k]. The term
/// list is an arbitrary multiset; duplicates accumulate under normalization.
struct USSRInstance {
  std::int64_t k = 1;
  std::vector<Term> terms;
};

/// Normal form: integer coefficients over the square-free basis of k, so the
/// represented value is sum_j delta[j] * sqrt(basis.elements[j]).
struct UUSSRInstance {
  std::int64_t k = 1;
  SquareFreeBasis basis;
  std::vector<std::int64_t> delta;

  std::size_t size() const { return delta.size(); }

  bool all_zero() const {
    for (std::int64_t d : delta)
      if (d != 0) return false;
    return true;
  }

  std::int64_t max_abs_delta() const {
    std::int64_t m = 0;
    for (std::int64_t d : delta) m = std::max(m, d < 0 ? -d : d);
    return m;
  }
};

inline UUSSRInstance make_uussr(std::int64_t k, std::vector<std::int64_t> delta) {
  UUSSRInstance inst;
  inst.k = k;
  inst.basis = square_free_basis(k);
  if (delta.size() != inst.basis.size())
    throw DomainError("make_uussr: delta has wrong arity for k");
  inst.delta = std::move(delta);
  return inst;
}

inline UUSSRInstance zero_uussr(std::int64_t k) {
  UUSSRInstance inst;
  inst.k = k;
  inst.basis = square_free_basis(k);
  inst.delta.assign(inst.basis.size(), 0);
  return inst;
}

/// Fold each term sign*sqrt(a) with a = c^2*s into the coefficient of
/// sqrt(s); perfect squares land on the coefficient of s_0 = 1. The value
/// and hence the sign of the sum is preserved exactly.
inline UUSSRInstance normalize(const USSRInstance& inst) {
  if (inst.k < 1) throw DomainError("normalize: k must be a positive integer");
  UUSSRInstance out = zero_uussr(inst.k);
  for (const Term& t : inst.terms) {
    if (t.value < 1 || t.value > inst.k)
      throw DomainError("normalize: term value outside [1, k]");
    if (t.sign != 1 && t.sign != -1)
      throw DomainError("normalize: term sign must be +1 or -1");
    const SquareFreeDecomposition d = square_free_part(t.value);
    const std::int64_t j = out.basis.index_of(d.part);
    out.delta[static_cast<std::size_t>(j)] += t.sign * d.core;
  }
  return out;
}

/// Exact zero test: the value vanishes iff every coefficient does, because
/// square roots of distinct square-free integers are linearly independent
/// over the rationals.
inline bool is_zero(const UUSSRInstance& inst) { return inst.all_zero(); }

/// Coefficient domain [-B, B]^(m+1) over the square-free basis of k.
struct DomainSpec {
  std::int64_t k = 1;
  std::int64_t B = 1;

  void validate() const {
    if (k < 1) throw DomainError("DomainSpec: k must be a positive integer");
    if (B < 1) throw DomainError("DomainSpec: B must be a positive integer");
  }
};

inline BigInt domain_size(const DomainSpec& dom) {
  dom.validate();
  const std::int64_t mp1 = square_free_count(dom.k);
  return pow_int(BigInt(2 * dom.B + 1), static_cast<std::uint64_t>(mp1));
}

inline constexpr std::int64_t kDefaultEnumerationCap = 5'000'000;

/// Streams every vector of [-B, B]^(m+1) exactly once, in lexicographic
/// order with the last coordinate varying fastest.
class DomainEnumerator {
 public:
  explicit DomainEnumerator(DomainSpec dom, std::int64_t cap = kDefaultEnumerationCap)
      : dom_(dom), basis_(square_free_basis(dom.k)) {
    if (domain_size(dom) > cap)
      throw ResourceLimitError("domain enumeration of " + domain_size(dom).str() +
                               " vectors exceeds cap " + std::to_string(cap));
    current_.assign(basis_.size(), -dom_.B);
  }

  const SquareFreeBasis& basis() const { return basis_; }

  std::optional<UUSSRInstance> next() {
    if (done_) return std::nullopt;
    UUSSRInstance inst;
    inst.k = dom_.k;
    inst.basis = basis_;
    inst.delta = current_;
    advance();
    return inst;
  }

 private:
  void advance() {
    for (std::size_t i = current_.size(); i-- > 0;) {
      if (current_[i] < dom_.B) {
        ++current_[i];
        return;
      }
      current_[i] = -dom_.B;
    }
    done_ = true;
  }

  DomainSpec dom_;
  SquareFreeBasis basis_;
  std::vector<std::int64_t> current_;
  bool done_ = false;
};

// --- instance families -----------------------------------------------------

enum class Family { primes, alternating_primes, random_terms };

inline Family parse_family(const std::string& name) {
  if (name == "primes") return Family::primes;
  if (name == "alternating-primes") return Family::alternating_primes;
  if (name == "random") return Family::random_terms;
  throw DomainError("unknown family tag: " + name);
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::primes: return "primes";
    case Family::alternating_primes: return "alternating-primes";
    case Family::random_terms: return "random";
  }
  throw DomainError("unknown family tag");
}

namespace detail {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace detail

/// Deterministic in (family, k, seed); the random family draws k terms from
/// a fixed 64-bit generator so reruns reproduce instances bit-exactly.
inline USSRInstance gen_family(Family family, std::int64_t k, std::uint64_t seed) {
  if (k < 1) throw DomainError("gen_family: k must be a positive integer");
  USSRInstance inst;
  inst.k = k;
  switch (family) {
    case Family::primes:
      for (std::int64_t p = 2; p <= k; ++p)
        if (detail::is_prime(p)) inst.terms.push_back({+1, p});
      break;
    case Family::alternating_primes: {
      int sign = +1;
      for (std::int64_t p = 2; p <= k; ++p)
        if (detail::is_prime(p)) {
          inst.terms.push_back({sign, p});
          sign = -sign;
        }
      break;
    }
    case Family::random_terms: {
      std::mt19937_64 rng(seed);
      for (std::int64_t i = 0; i < k; ++i) {
        const std::int64_t value = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(k));
        const int sign = (rng() & 1u) != 0 ? +1 : -1;
        inst.terms.push_back({sign, value});
      }
      break;
    }
  }
  return inst;
}

}  // namespace ussr
