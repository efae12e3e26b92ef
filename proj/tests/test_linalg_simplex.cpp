#include <optional>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "ussr/linalg.hpp"
#include "ussr/simplex.hpp"

using namespace ussr;

namespace {

RatMat mat(std::initializer_list<std::initializer_list<int>> rows) {
  RatMat out;
  for (const auto& r : rows) {
    RatVec row;
    for (int v : r) row.push_back(Rational(v));
    out.push_back(std::move(row));
  }
  return out;
}

RatVec vec(std::initializer_list<int> vals) {
  RatVec out;
  for (int v : vals) out.push_back(Rational(v));
  return out;
}

// Cofactor-expansion determinant: the independent oracle for elimination.
Rational det_by_cofactors(const RatMat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RatMat minor;
    for (std::size_t r = 1; r < n; ++r) {
      RatVec row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    const Rational term = a[0][j] * det_by_cofactors(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Exhaustive vertex enumeration for min c^T x, A x >= b: solve every n-subset
// of tight constraints and take the best feasible solution. Complete for
// pointed feasible regions, which the callers arrange.
std::optional<Rational> brute_force_lp(const RatMat& a, const RatVec& b, const RatVec& c) {
  const std::size_t n = c.size();
  const std::size_t rows = a.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  auto feasible = [&](const RatVec& x) {
    for (std::size_t i = 0; i < rows; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * x[j];
      if (dot < b[i]) return false;
    }
    return true;
  };
  std::vector<std::size_t> idx(n);
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
    if (depth == n) {
      RatMat sys(n, RatVec(n));
      RatVec rhs(n);
      for (std::size_t r = 0; r < n; ++r) {
        sys[r] = a[idx[r]];
        rhs[r] = b[idx[r]];
      }
      const auto x = solve_linear(sys, rhs);
      if (!x || !feasible(*x)) return;
      Rational obj = 0;
      for (std::size_t j = 0; j < n; ++j) obj += c[j] * (*x)[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (std::size_t i = start; i < rows; ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return best;
}

}  // namespace

TEST_CASE("determinant on known matrices") {
  CHECK(determinant(mat({{0, -1, 1}, {-1, 1, 0}, {1, 1, -1}})) == Rational(-1));
  CHECK(determinant(identity_matrix(4)) == Rational(1));
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == Rational(0));
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    RatMat a(n, RatVec(n));
    for (auto& row : a)
      for (auto& x : row) x = Rational(static_cast<std::int64_t>(rng() % 11) - 5);
    REQUIRE(determinant(a) == det_by_cofactors(a));
  }
}

TEST_CASE("solve_linear and inverse are exact") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    RatMat a(n, RatVec(n));
    for (auto& row : a)
      for (auto& x : row) x = Rational(static_cast<std::int64_t>(rng() % 9) - 4);
    RatVec b(n);
    for (auto& x : b) x = Rational(static_cast<std::int64_t>(rng() % 9) - 4);

    const auto x = solve_linear(a, b);
    const auto inv = inverse(a);
    REQUIRE(x.has_value() == inv.has_value());
    REQUIRE((determinant(a) != 0) == x.has_value());
    if (!x) continue;
    for (std::size_t i = 0; i < n; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * (*x)[j];
      REQUIRE(dot == b[i]);
    }
    RatMat prod(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t j = 0; j < n; ++j) prod[i][j] += a[i][kk] * (*inv)[kk][j];
    REQUIRE(is_identity(prod));
  }
  CHECK(!solve_linear(mat({{1, 2}, {2, 4}}), vec({1, 1})).has_value());
  CHECK(!inverse(mat({{0, 0}, {0, 0}})).has_value());
}

TEST_CASE("RowSpace flags dependence and tracks rank") {
  RowSpace space(3);
  CHECK(space.try_add({1, 2, 3}));
  CHECK(space.rank() == 1);
  CHECK(!space.try_add({2, 4, 6}));
  CHECK(space.try_add({0, 1, 1}));
  CHECK(!space.try_add({1, 3, 4}));  // sum of the first two
  CHECK(space.would_extend({0, 0, 1}));
  CHECK(space.try_add({0, 0, 1}));
  CHECK(space.rank() == 3);
  CHECK(!space.would_extend({7, -2, 5}));  // full space now
}

TEST_CASE("simplex solves the textbook cases") {
  // min z s.t. z >= 1
  const LpSolution a = solve_lp_min(mat({{1}}), vec({1}), vec({1}));
  REQUIRE(a.status == LpStatus::optimal);
  CHECK(a.x[0] == Rational(1));
  CHECK(a.objective == Rational(1));

  // min z s.t. z >= -5 (negative right-hand side path)
  const LpSolution b = solve_lp_min(mat({{1}}), vec({-5}), vec({1}));
  REQUIRE(b.status == LpStatus::optimal);
  CHECK(b.x[0] == Rational(-5));

  // min -z s.t. z >= 0: unbounded above
  CHECK(solve_lp_min(mat({{1}}), vec({0}), vec({-1})).status == LpStatus::unbounded);

  // z >= 1 and -z >= 1: infeasible
  CHECK(solve_lp_min(mat({{1}, {-1}}), vec({1, 1}), vec({1})).status == LpStatus::infeasible);
}

TEST_CASE("simplex reproduces the hand-checked realization LPs") {
  // Positive vectors of the k=2, B=1 domain.
  const LpSolution a = solve_lp_min(mat({{-1, 1}, {0, 1}, {1, 0}, {1, 1}}),
                                    vec({1, 1, 1, 1}), vec({1, 1}));
  REQUIRE(a.status == LpStatus::optimal);
  CHECK(a.objective == Rational(3));
  CHECK(a.x == vec({1, 2}));

  // Positive vectors of the k=3, B=1 domain.
  const LpSolution b = solve_lp_min(
      mat({{-1, 0, 1}, {-1, 1, 0}, {-1, 1, 1}, {0, -1, 1}, {0, 0, 1}, {0, 1, 0},
           {0, 1, 1}, {1, -1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, -1}, {1, 1, 0}, {1, 1, 1}}),
      vec({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), vec({1, 1, 1}));
  REQUIRE(b.status == LpStatus::optimal);
  CHECK(b.objective == Rational(9));
  CHECK(b.x == vec({2, 3, 4}));
}

TEST_CASE("simplex agrees with brute-force vertex enumeration") {
  std::mt19937_64 rng(17);
  int optimal_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t extra = 2 + rng() % 4;
    RatMat a;
    RatVec b;
    // Box constraints x_j >= -6 keep the region pointed so vertex
    // enumeration is a complete oracle.
    for (std::size_t j = 0; j < n; ++j) {
      RatVec row(n, Rational(0));
      row[j] = 1;
      a.push_back(std::move(row));
      b.push_back(Rational(-6));
    }
    for (std::size_t i = 0; i < extra; ++i) {
      RatVec row(n);
      for (auto& x : row) x = Rational(static_cast<std::int64_t>(rng() % 7) - 3);
      a.push_back(std::move(row));
      b.push_back(Rational(static_cast<std::int64_t>(rng() % 5) - 2));
    }
    RatVec c(n);
    for (auto& x : c) x = Rational(static_cast<std::int64_t>(rng() % 5) - 2);

    const LpSolution sol = solve_lp_min(a, b, c);
    const auto brute = brute_force_lp(a, b, c);
    if (sol.status == LpStatus::optimal) {
      ++optimal_seen;
      REQUIRE(brute.has_value());
      REQUIRE(sol.objective == *brute);
      // The returned point must satisfy every constraint exactly.
      for (std::size_t i = 0; i < a.size(); ++i) {
        Rational dot = 0;
        for (std::size_t j = 0; j < n; ++j) dot += a[i][j] * sol.x[j];
        REQUIRE(dot >= b[i]);
      }
    }
  }
  CHECK(optimal_seen > 50);  // the sampler must actually exercise the solver
}
