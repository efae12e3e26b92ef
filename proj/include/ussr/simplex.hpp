#pragma once

#include <cstdint>
#include <vector>

#include "ussr/errors.hpp"
#include "ussr/linalg.hpp"
#include "ussr/numbers.hpp"

namespace ussr {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  RatVec x;            // primal solution of the original (free) variables
  Rational objective;  // c^T x at optimum
};

/// Minimize c^T x subject to A x >= b with x free, in exact rational
/// arithmetic.
///
/// Classic two-phase tableau simplex with Bland's anti-cycling rule. Free
/// variables are split x = xp - xn, constraints get surplus variables, and
/// phase 1 drives artificial variables to zero. Everything is exact, so
/// optimality and infeasibility are decided, not estimated.
class SimplexSolver {
 public:
  SimplexSolver(const RatMat& a, const RatVec& b, const RatVec& c)
      : rows_(a.size()), n_(c.size()) {
    if (b.size() != rows_) throw DomainError("simplex: |b| != #rows");
    for (const RatVec& row : a)
      if (row.size() != n_) throw DomainError("simplex: ragged constraint matrix");
    // Columns: xp(n) xn(n) surplus(rows) artificial(rows) | rhs
    cols_ = 2 * n_ + 2 * rows_;
    tab_.assign(rows_, RatVec(cols_ + 1, Rational(0)));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;  // keep rhs nonnegative for phase 1
      const Rational s = flip ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n_; ++j) {
        tab_[i][j] = s * a[i][j];
        tab_[i][n_ + j] = -s * a[i][j];
      }
      tab_[i][2 * n_ + i] = -s;            // surplus for Ax - s = b
      tab_[i][2 * n_ + rows_ + i] = 1;     // artificial
      tab_[i][cols_] = s * b[i];
      basis_[i] = 2 * n_ + rows_ + i;
    }
    costs_.assign(cols_, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) {
      costs_[j] = c[j];
      costs_[n_ + j] = -c[j];
    }
  }

  LpSolution solve() {
    // Phase 1: minimize the sum of artificials.
    RatVec phase1(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) phase1[2 * n_ + rows_ + i] = 1;
    if (run_phase(phase1) != LpStatus::optimal)
      throw Error("simplex: phase 1 cannot be unbounded");
    if (objective_of(phase1) != 0) return {LpStatus::infeasible, {}, Rational(0)};
    expel_artificials();

    // Phase 2: original objective, artificial columns barred.
    const LpStatus status = run_phase(costs_, /*bar_artificials=*/true);
    LpSolution out;
    out.status = status;
    if (status != LpStatus::optimal) return out;
    RatVec full(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) full[basis_[i]] = tab_[i][cols_];
    out.x.resize(n_);
    for (std::size_t j = 0; j < n_; ++j) out.x[j] = full[j] - full[n_ + j];
    out.objective = 0;
    for (std::size_t j = 0; j < n_; ++j) out.objective += costs_[j] * full[j] - costs_[j] * full[n_ + j];
    return out;
  }

 private:
  bool is_artificial(std::size_t col) const { return col >= 2 * n_ + rows_; }

  Rational objective_of(const RatVec& cost) const {
    Rational v = 0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * tab_[i][cols_];
    return v;
  }

  // Reduced cost of a column under the given cost vector.
  Rational reduced_cost(const RatVec& cost, std::size_t col) const {
    Rational r = cost[col];
    for (std::size_t i = 0; i < rows_; ++i) r -= cost[basis_[i]] * tab_[i][col];
    return r;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / tab_[row][col];
    for (std::size_t j = 0; j <= cols_; ++j) tab_[row][j] *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      const Rational f = tab_[i][col];
      for (std::size_t j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  LpStatus run_phase(const RatVec& cost, bool bar_artificials = false) {
    for (;;) {
      // Bland: entering variable is the lowest-index negative reduced cost.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (bar_artificials && is_artificial(j)) continue;
        if (reduced_cost(cost, j) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols_) return LpStatus::optimal;
      // Ratio test; ties leave the lowest basis index (Bland).
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        const Rational ratio = tab_[i][cols_] / tab_[i][enter];
        if (leave == rows_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) return LpStatus::unbounded;
      pivot(leave, enter);
    }
  }

  /// After phase 1, pivot any artificial still basic (at value zero) out on
  /// a structural column; rows with no such column are redundant and inert.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < 2 * n_ + rows_; ++j) {
        if (tab_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::size_t rows_, n_, cols_ = 0;
  RatMat tab_;
  std::vector<std::size_t> basis_;
  RatVec costs_;
};

/// min c^T x s.t. A x >= b, x free.
inline LpSolution solve_lp_min(const RatMat& a, const RatVec& b, const RatVec& c) {
  return SimplexSolver(a, b, c).solve();
}

}  // namespace ussr
