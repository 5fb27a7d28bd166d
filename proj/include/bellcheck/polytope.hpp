#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bellcheck/behavior.hpp"
#include "bellcheck/errors.hpp"
#include "bellcheck/rational.hpp"

namespace bellcheck {

/// The sixteen deterministic strategies of the 2-setting/2-outcome scenario.
/// Strategy k = 4*ka + kb; bit x of ka is wing A's outcome index under
/// setting x, likewise kb for wing B.
inline int strategy_outcome_a(int k, int x) { return (k >> 2 >> x) & 1; }
inline int strategy_outcome_b(int k, int y) { return (k >> y) & 1; }

inline BehaviorTable strategy_table(int k) {
  BehaviorTable t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          t.at(x, y, i, j) =
              (i == strategy_outcome_a(k, x) && j == strategy_outcome_b(k, y)) ? 1 : 0;
  return t;
}

/// A convex combination of deterministic strategies reproducing a behavior.
struct LhvDecomposition {
  std::array<Rational, 16> weights{};

  BehaviorTable reconstruct() const {
    BehaviorTable t;
    for (int k = 0; k < 16; ++k) {
      if (weights[k] == 0) continue;
      const BehaviorTable v = strategy_table(k);
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) t.at(x, y, i, j) += weights[k] * v.at(x, y, i, j);
    }
    return t;
  }
};

struct LhvResult {
  std::optional<LhvDecomposition> decomposition;
  std::string violated_facet;  // set when not a member
  Rational facet_value;

  bool member() const { return decomposition.has_value(); }
};

namespace detail {

/// Phase-1 simplex with exact rationals and Bland's rule: is there w >= 0
/// with A w = rhs? rhs must be nonnegative. Returns the solution if so.
inline std::optional<std::vector<Rational>> solve_feasibility(
    const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& rhs) {
  const std::size_t m = A.size();
  const std::size_t n = m == 0 ? 0 : A[0].size();
  const std::size_t cols = n + m;  // real vars then artificials

  // Tableau rows 0..m-1 are constraints, row m is the phase-1 objective.
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols] = rhs[i];
    basis[i] = n + i;
  }
  // Reduced costs with the artificial basis priced out.
  for (std::size_t j = 0; j < cols; ++j) {
    Rational c = (j >= n) ? Rational(1) : Rational(0);
    for (std::size_t i = 0; i < m; ++i) c -= T[i][j];
    T[m][j] = c;
  }
  for (std::size_t i = 0; i < m; ++i) T[m][cols] -= T[i][cols];

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][cols] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw InputError("feasibility system is unbounded");  // cannot happen

    const Rational pivot = T[leave][enter];
    for (auto& v : T[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const Rational factor = T[i][enter];
      if (factor == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= factor * T[leave][j];
    }
    basis[leave] = enter;
  }

  if (T[m][cols] != 0) return std::nullopt;  // artificials cannot be driven to zero
  std::vector<Rational> w(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) w[basis[i]] = T[i][cols];
  return w;
}

}  // namespace detail

/// All eight CHSH facet values of a table, largest first is not guaranteed;
/// use chsh_value for the maximum.
inline std::vector<std::pair<std::string, Rational>> chsh_facets(const BehaviorTable& t) {
  const Correlators c = correlators(t);
  std::vector<std::pair<std::string, Rational>> out;
  for (int mask = 0; mask < 16; ++mask) {
    int minus = 0;
    for (int b = 0; b < 4; ++b)
      if (mask & (1 << b)) minus++;
    if (minus % 2 == 0) continue;
    Rational s = 0;
    std::string conv;
    int b = 0;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y, ++b) {
        const int sign = (mask & (1 << b)) ? -1 : 1;
        conv += (sign > 0 ? '+' : '-');
        s += Rational(sign) * c.E[x][y];
      }
    out.emplace_back("CHSH[" + conv + "]", s);
  }
  return out;
}

/// Exact membership in the local polytope: feasibility of the sixteen
/// deterministic-strategy mixture equations. On failure names a violated
/// facet: a no-signalling equality or a CHSH inequality above 2.
inline LhvResult lhv_membership(const BehaviorTable& t) {
  t.validate();
  std::vector<std::vector<Rational>> A;
  std::vector<Rational> rhs;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::vector<Rational> row(16, Rational(0));
          for (int k = 0; k < 16; ++k)
            if (strategy_outcome_a(k, x) == i && strategy_outcome_b(k, y) == j) row[k] = 1;
          A.push_back(std::move(row));
          rhs.push_back(t.at(x, y, i, j));
        }

  LhvResult res;
  if (auto w = detail::solve_feasibility(A, rhs)) {
    LhvDecomposition d;
    for (int k = 0; k < 16; ++k) d.weights[k] = (*w)[k];
    res.decomposition = std::move(d);
    return res;
  }

  const CheckReport ns = check_no_signalling_behavior(t);
  if (ns.failed()) {
    res.violated_facet = "no-signalling:" + ns.witnesses.front().where + " " +
                         ns.witnesses.front().assignment;
    res.facet_value = ns.witnesses.front().lhs - ns.witnesses.front().rhs;
    return res;
  }
  for (const auto& [name, value] : chsh_facets(t))
    if (value > 2) {
      res.violated_facet = name;
      res.facet_value = value;
      return res;
    }
  // A valid no-signalling table outside the polytope must break a CHSH
  // facet; reaching here means the solver itself failed.
  throw InputError("internal error: infeasible table violates no known facet");
}

/// Independent oracle for lhv_membership via the facet description of the
/// local polytope: positivity, no-signalling, and all eight CHSH
/// inequalities at most 2.
inline bool chsh_facet_membership(const BehaviorTable& t) {
  t.validate();
  if (check_no_signalling_behavior(t).failed()) return false;
  for (const auto& [name, value] : chsh_facets(t)) {
    (void)name;
    if (value > 2) return false;
  }
  return true;
}

}  // namespace bellcheck
