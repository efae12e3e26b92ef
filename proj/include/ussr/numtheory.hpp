#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ussr/errors.hpp"

namespace ussr {

/// n = core^2 * part with part square-free and core maximal.
struct SquareFreeDecomposition {
  std::int64_t n;
  std::int64_t core;
  std::int64_t part;
};

/// Extract the largest square divisor by trial division with increasing d.
/// Once every prime p < d has had p^2 divided out, a composite d can no
/// longer have d^2 dividing the remainder, so plain integers work as well
/// as primes here.
inline SquareFreeDecomposition square_free_part(std::int64_t n) {
  if (n < 1) throw DomainError("square_free_part: n must be a positive integer");
  std::int64_t rest = n, core = 1;
  for (std::int64_t d = 2; d <= rest / d; ++d) {
    const std::int64_t dd = d * d;
    while (rest % dd == 0) {
      rest /= dd;
      core *= d;
    }
  }
  return {n, core, rest};
}

namespace detail {

/// sf[i] == true iff i is square-free, for i in [0, k]. Sieve of squares.
inline std::vector<char> square_free_sieve(std::int64_t k) {
  std::vector<char> sf(static_cast<std::size_t>(k) + 1, 1);
  sf[0] = 0;
  for (std::int64_t d = 2; d <= k / d; ++d) {
    const std::int64_t dd = d * d;
    for (std::int64_t i = dd; i <= k; i += dd) sf[static_cast<std::size_t>(i)] = 0;
  }
  return sf;
}

}  // namespace detail

/// The ordered square-free integers 1 = s_0 < s_1 < ... < s_m <= k.
struct SquareFreeBasis {
  std::int64_t k = 0;
  std::vector<std::int64_t> elements;

  std::size_t size() const { return elements.size(); }

  /// Position of a square-free s in the basis, or -1 if absent.
  std::int64_t index_of(std::int64_t s) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s);
    if (it == elements.end() || *it != s) return -1;
    return it - elements.begin();
  }

  bool operator==(const SquareFreeBasis& other) const {
    return k == other.k && elements == other.elements;
  }
};

inline SquareFreeBasis square_free_basis(std::int64_t k) {
  if (k < 1) throw DomainError("square_free_basis: k must be a positive integer");
  const std::vector<char> sf = detail::square_free_sieve(k);
  SquareFreeBasis basis;
  basis.k = k;
  for (std::int64_t i = 1; i <= k; ++i)
    if (sf[static_cast<std::size_t>(i)]) basis.elements.push_back(i);
  return basis;
}

inline std::int64_t square_free_count(std::int64_t k) {
  if (k < 1) throw DomainError("square_free_count: k must be a positive integer");
  const std::vector<char> sf = detail::square_free_sieve(k);
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= k; ++i) count += sf[static_cast<std::size_t>(i)];
  return count;
}

}  // namespace ussr
