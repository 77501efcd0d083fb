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

#ifndef RISKCOMB_ORDERS_HPP
#define RISKCOMB_ORDERS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "riskcomb/axioms.hpp"
#include "riskcomb/combinators.hpp"

namespace riskcomb {

/// Stochastic dominance flavor: first or second degree, judged under one
/// scenario or under every scenario of the set.
struct OrderKind {
  int degree = 1;          // 1 or 2
  bool scope_all = false;  // true: conjunction over the scenario list

  static OrderKind first(bool scope_all = false) { return {1, scope_all}; }
  static OrderKind second(bool scope_all = false) { return {2, scope_all}; }
};

/// Degree 1: quantiles of x dominate those of y at every jump level.
/// Degree 2: partial quantile integrals dominate at every breakpoint (both
/// envelopes are piecewise linear, so the breakpoints decide).
bool dominates(const Position& x, const Position& y, OrderKind kind,
               const std::vector<ScenarioMeasure>& scenarios);

struct DominanceDetail {
  bool dominates = false;
  std::size_t scenario_index = 0;  // first violating scenario when false
  double level = 0.0;              // first violating quantile level
};

DominanceDetail dominates_detail(const Position& x, const Position& y,
                                 OrderKind kind,
                                 const std::vector<ScenarioMeasure>& scenarios);

struct RespectReport {
  bool passed = false;
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<CheckWitness> witness;
};

/// Draws dominated pairs by construction (rank-decreasing perturbation of a
/// sorted position, reshuffled within equal-probability outcome groups) and
/// checks rho(dominant) <= rho(dominated).
RespectReport respects_order(const RiskBundle& rho, OrderKind kind,
                             std::uint64_t seed, std::size_t trials = 10000);

}  // namespace riskcomb

#endif  // RISKCOMB_ORDERS_HPP
