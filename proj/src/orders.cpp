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

#include "riskcomb/orders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"

namespace riskcomb {

namespace {

constexpr double kCompareSlack = 1e-12;

std::optional<double> violation_level(const Position& x, const Position& y,
                                      const ScenarioMeasure& q, int degree) {
  const Distribution fx = distribution(x, q);
  const Distribution fy = distribution(y, q);
  std::set<double> merged = {0.0, 1.0};
  for (const auto& atom : fx.atoms()) merged.insert(atom.cum);
  for (const auto& atom : fy.atoms()) merged.insert(atom.cum);
  // Running sums of the two distributions can disagree by an ulp at the
  // same mathematical level; collapse such slivers before comparing.
  std::vector<double> levels;
  for (double level : merged) {
    if (levels.empty() || level - levels.back() > 1e-9) {
      levels.push_back(level);
    }
  }
  if (degree == 1) {
    // Both quantile steps are constant on each piece (lo, hi]; the midpoint
    // sees the same value as every formal jump level inside the piece.
    if (fx.quantile(0.0) < fy.quantile(0.0) - kCompareSlack) return 0.0;
    for (std::size_t t = 1; t < levels.size(); ++t) {
      const double mid = 0.5 * (levels[t - 1] + levels[t]);
      if (fx.quantile(mid) < fy.quantile(mid) - kCompareSlack) {
        return levels[t];
      }
    }
    return std::nullopt;
  }
  for (double level : levels) {
    const double ix = integrate_quantile(fx, 0.0, level);
    const double iy = integrate_quantile(fy, 0.0, level);
    if (ix < iy - kCompareSlack) return level;
  }
  return std::nullopt;
}

}  // namespace

DominanceDetail dominates_detail(const Position& x, const Position& y,
                                 OrderKind kind,
                                 const std::vector<ScenarioMeasure>& scenarios) {
  if (scenarios.empty()) throw DomainError("dominates: empty scenario set");
  if (kind.degree != 1 && kind.degree != 2) {
    throw DomainError("dominates: degree must be 1 or 2");
  }
  if (!kind.scope_all && scenarios.size() != 1) {
    throw DomainError("dominates: single-scenario order takes one scenario");
  }
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (auto level = violation_level(x, y, scenarios[i], kind.degree)) {
      return {false, i, *level};
    }
  }
  return {true, 0, 0.0};
}

bool dominates(const Position& x, const Position& y, OrderKind kind,
               const std::vector<ScenarioMeasure>& scenarios) {
  return dominates_detail(x, y, kind, scenarios).dominates;
}

namespace {

/// Outcome classes whose members every scenario weighs identically; the
/// dominated leg may be reshuffled inside them without moving any F_{Y,Q}.
std::vector<std::vector<std::size_t>> exchangeable_groups(
    const std::vector<ScenarioMeasure>& scenarios, std::size_t n) {
  std::map<std::vector<double>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> key;
    key.reserve(scenarios.size());
    for (const auto& q : scenarios) key.push_back(q[k]);
    groups[key].push_back(k);
  }
  std::vector<std::vector<std::size_t>> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

RespectReport respects_order(const RiskBundle& rho, OrderKind kind,
                             std::uint64_t seed, std::size_t trials) {
  const SpacePtr& space = rho.space();
  const std::size_t n = space->size();
  const auto groups = exchangeable_groups(rho.scenarios, n);
  Rng rng(seed);

  RespectReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> dominant = rng.vector(n, -10.0, 10.0);

    // Rank-decreasing perturbation: the worse the outcome, the more the
    // dominated leg loses.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return dominant[a] < dominant[b];
                     });
    double drop = rng.uniform(0.0, 4.0);
    std::vector<double> dominated = dominant;
    for (std::size_t rank = 0; rank < n; ++rank) {
      dominated[order[rank]] -= drop;
      drop *= rng.uniform(0.3, 1.0);  // keep it nonincreasing in rank
    }

    // Reshuffle the dominated leg inside exchangeable outcome groups; its
    // per-scenario laws are untouched, the pointwise ordering is not.
    for (const auto& members : groups) {
      std::vector<double> values;
      values.reserve(members.size());
      for (std::size_t k : members) values.push_back(dominated[k]);
      for (std::size_t k = values.size(); k > 1; --k) {
        std::swap(values[k - 1], values[rng.index(k)]);
      }
      for (std::size_t k = 0; k < members.size(); ++k) {
        dominated[members[k]] = values[k];
      }
    }

    const Position x(space, dominant);
    const Position y(space, dominated);
    if (!dominates(x, y, kind, rho.scenarios)) {
      // The reshuffle can only reorder equals, so this should not happen;
      // skip rather than assert on a malformed draw.
      continue;
    }
    const double rx = rho(x);
    const double ry = rho(y);
    const double tol = 1e-10 * (1.0 + std::abs(rx) + std::abs(ry));
    if (rx > ry + tol) {
      ++report.violations;
      if (!report.witness) {
        report.witness = CheckWitness{dominant, dominated, 0.0, rx, ry};
      }
    }
  }
  report.passed = report.violations == 0;
  return report;
}

}  // namespace riskcomb
