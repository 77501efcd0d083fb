/*
 * Copyright 2026 The riskcomb authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKCOMB_SIMPLEX_HPP
#define RISKCOMB_SIMPLEX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "riskcomb/errors.hpp"
#include "riskcomb/rational.hpp"

namespace riskcomb {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective{};
  std::vector<Scalar> x;  // primal values for the builder's variables
};

template <typename Scalar>
struct LpTolerance {
  static Scalar pivot() { return Scalar(0); }
};

template <>
struct LpTolerance<double> {
  static double pivot() { return 1e-9; }
};

/// Dense two-phase primal simplex with Bland's rule, for the small exact
/// LPs behind penalty and dual-set computations.  Variables are nonnegative
/// with optional upper bounds; constraints are == or <= rows.  Instantiated
/// with double (pivot tolerance 1e-9) or Rational (exact arithmetic).
template <typename Scalar>
class LpBuilder {
 public:
  using Term = std::pair<std::size_t, Scalar>;

  std::size_t add_variable(Scalar objective_coeff = Scalar(0),
                           std::optional<Scalar> upper = std::nullopt) {
    objective_.push_back(std::move(objective_coeff));
    upper_.push_back(std::move(upper));
    return objective_.size() - 1;
  }

  void add_eq(std::vector<Term> terms, Scalar rhs) {
    rows_.push_back({std::move(terms), std::move(rhs), true});
  }

  void add_le(std::vector<Term> terms, Scalar rhs) {
    rows_.push_back({std::move(terms), std::move(rhs), false});
  }

  LpSolution<Scalar> maximize() const { return run(true); }

  /// Phase 1 only; objective/x are meaningless unless Optimal.
  LpSolution<Scalar> feasible() const { return run(false); }

 private:
  struct Row {
    std::vector<Term> terms;
    Scalar rhs;
    bool equality;
  };

  static bool is_zero(const Scalar& v) {
    const Scalar tol = LpTolerance<Scalar>::pivot();
    return v <= tol && v >= -tol;
  }

  LpSolution<Scalar> run(bool want_phase2) const {
    const std::size_t n_user = objective_.size();

    // Assemble standard form: slacks for <= rows and for upper bounds.
    std::size_t n = n_user;
    std::vector<std::vector<Scalar>> a;
    std::vector<Scalar> b;
    auto add_row = [&](std::vector<Scalar> row, Scalar rhs) {
      if (rhs < Scalar(0)) {
        for (auto& v : row) v = -v;
        rhs = -rhs;
      }
      a.push_back(std::move(row));
      b.push_back(std::move(rhs));
    };

    std::size_t n_slack = 0;
    for (const auto& row : rows_) {
      if (!row.equality) ++n_slack;
    }
    for (const auto& ub : upper_) {
      if (ub) ++n_slack;
    }
    n += n_slack;

    std::size_t next_slack = n_user;
    for (const auto& row : rows_) {
      std::vector<Scalar> coeffs(n, Scalar(0));
      for (const auto& [j, v] : row.terms) {
        if (j >= n_user) throw InternalError("LpBuilder: bad variable index");
        coeffs[j] += v;
      }
      if (!row.equality) coeffs[next_slack++] = Scalar(1);
      add_row(std::move(coeffs), row.rhs);
    }
    for (std::size_t j = 0; j < n_user; ++j) {
      if (!upper_[j]) continue;
      std::vector<Scalar> coeffs(n, Scalar(0));
      coeffs[j] = Scalar(1);
      coeffs[next_slack++] = Scalar(1);
      add_row(std::move(coeffs), *upper_[j]);
    }

    const std::size_t m = a.size();
    // Artificial basis: columns n..n+m-1.
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
      a[i].resize(n + m, Scalar(0));
      a[i][n + i] = Scalar(1);
      basis[i] = n + i;
    }

    // Phase-1 cost row (z_j - c_j for the maximize form of -sum artificials)
    // and the phase-2 cost row, both kept reduced throughout.
    std::vector<Scalar> cost1(n + m, Scalar(0));
    Scalar obj1(0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n + m; ++j) cost1[j] += a[i][j];
      obj1 += b[i];
    }
    for (std::size_t i = 0; i < m; ++i) cost1[n + i] = Scalar(0);

    // Both cost rows store the improvement direction c_j - z_j; the tracked
    // scalar is the negated current objective, per the usual tableau layout.
    std::vector<Scalar> cost2(n + m, Scalar(0));
    Scalar obj2(0);
    for (std::size_t j = 0; j < n_user; ++j) cost2[j] = objective_[j];

    auto pivot = [&](std::size_t prow, std::size_t pcol) {
      const Scalar inv = Scalar(1) / a[prow][pcol];
      for (auto& v : a[prow]) v *= inv;
      b[prow] *= inv;
      a[prow][pcol] = Scalar(1);  // kill rounding residue on the pivot
      for (std::size_t i = 0; i < m; ++i) {
        if (i == prow || is_zero(a[i][pcol])) continue;
        const Scalar factor = a[i][pcol];
        for (std::size_t j = 0; j < n + m; ++j) a[i][j] -= factor * a[prow][j];
        a[i][pcol] = Scalar(0);
        b[i] -= factor * b[prow];
        if (b[i] < Scalar(0) && -b[i] <= LpTolerance<Scalar>::pivot()) {
          b[i] = Scalar(0);
        }
      }
      auto reduce_cost = [&](std::vector<Scalar>& cost, Scalar& obj) {
        if (is_zero(cost[pcol])) return;
        const Scalar factor = cost[pcol];
        for (std::size_t j = 0; j < n + m; ++j) cost[j] -= factor * a[prow][j];
        cost[pcol] = Scalar(0);
        obj -= factor * b[prow];
      };
      reduce_cost(cost1, obj1);
      reduce_cost(cost2, obj2);
      basis[prow] = pcol;
    };

    auto iterate = [&](const std::vector<Scalar>& cost,
                       std::size_t col_limit) -> bool {
      // Bland's rule: smallest improving column, smallest basic index on
      // ratio ties.  Returns false on unboundedness.
      for (;;) {
        std::size_t enter = col_limit;
        for (std::size_t j = 0; j < col_limit; ++j) {
          if (cost[j] > LpTolerance<Scalar>::pivot()) {
            enter = j;
            break;
          }
        }
        if (enter == col_limit) return true;  // optimal
        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
          if (a[i][enter] <= LpTolerance<Scalar>::pivot()) continue;
          if (leave == m) {
            leave = i;
            continue;
          }
          const Scalar lhs = b[i] * a[leave][enter];
          const Scalar rhs = b[leave] * a[i][enter];
          if (lhs < rhs || (lhs == rhs && basis[i] < basis[leave])) leave = i;
        }
        if (leave == m) return false;
        pivot(leave, enter);
      }
    };

    LpSolution<Scalar> result;

    // Phase 1 maximizes -(sum of artificials); cost1 currently holds the
    // reduced row for that objective (artificial columns zeroed).
    if (!iterate(cost1, n)) {
      throw InternalError("simplex: phase 1 cannot be unbounded");
    }
    if (obj1 > LpTolerance<Scalar>::pivot() * Scalar(m > 0 ? m : 1)) {
      result.status = LpStatus::Infeasible;
      return result;
    }

    // Drive leftover zero-level artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) continue;
      std::size_t col = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(a[i][j])) {
          col = j;
          break;
        }
      }
      if (col < n) pivot(i, col);
      // else: redundant row; it can never bind, leave it in place.
    }

    if (want_phase2) {
      if (!iterate(cost2, n)) {
        result.status = LpStatus::Unbounded;
        return result;
      }
    }

    result.status = LpStatus::Optimal;
    result.x.assign(n_user, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n_user) result.x[basis[i]] = b[i];
    }
    if (want_phase2) {
      result.objective = -obj2;
    } else {
      result.objective = Scalar(0);
      for (std::size_t j = 0; j < n_user; ++j) {
        result.objective += objective_[j] * result.x[j];
      }
    }
    return result;
  }

  std::vector<Scalar> objective_;
  std::vector<std::optional<Scalar>> upper_;
  std::vector<Row> rows_;
};

}  // namespace riskcomb

#endif  // RISKCOMB_SIMPLEX_HPP
