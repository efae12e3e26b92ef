#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ussr/errors.hpp"
#include "ussr/numbers.hpp"

namespace ussr {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline RatMat identity_matrix(std::size_t n) {
  RatMat id(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline RatMat transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline bool is_identity(const RatMat& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != Rational(i == j ? 1 : 0)) return false;
  }
  return true;
}

/// Exact determinant by rational Gaussian elimination.
inline Rational determinant(RatMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

/// Solve A x = b exactly; nullopt when A is singular.
inline std::optional<RatVec> solve_linear(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

/// Exact inverse by Gauss-Jordan; nullopt when singular.
inline std::optional<RatMat> inverse(RatMat a) {
  const std::size_t n = a.size();
  RatMat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = Rational(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Incremental row space for greedy independence checks. One reduced row is
/// kept per leading column; a candidate is reduced column by column, which
/// strictly advances its leading index and so terminates.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols), by_lead_(cols) {}

  std::size_t rank() const { return rank_; }

  bool would_extend(const std::vector<std::int64_t>& row) const {
    return !reduce(row).empty();
  }

  /// Adds the row if independent; returns whether it extended the space.
  bool try_add(const std::vector<std::int64_t>& row) {
    RatVec reduced = reduce(row);
    if (reduced.empty()) return false;
    const std::size_t lead = leading_index(reduced);
    by_lead_[lead] = std::move(reduced);
    ++rank_;
    return true;
  }

 private:
  // Fully reduced candidate, or empty when dependent.
  RatVec reduce(const std::vector<std::int64_t>& row) const {
    RatVec v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = Rational(row[j]);
    for (std::size_t lead = 0; lead < cols_; ++lead) {
      if (v[lead] == 0) continue;
      const RatVec& e = by_lead_[lead];
      if (e.empty()) return v;  // fresh leading column: independent
      const Rational f = v[lead] / e[lead];
      for (std::size_t j = lead; j < cols_; ++j) v[j] -= f * e[j];
    }
    return {};
  }

  static std::size_t leading_index(const RatVec& e) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] != 0) return j;
    throw Error("RowSpace: zero row in echelon set");
  }

  std::size_t cols_;
  std::vector<RatVec> by_lead_;  // empty slot = no row with that lead yet
  std::size_t rank_ = 0;
};

}  // namespace ussr
