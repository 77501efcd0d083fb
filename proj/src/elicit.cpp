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

#include "riskcomb/elicit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskcomb/errors.hpp"

namespace riskcomb {

ScoringFunction ScoringFunction::squared_error() {
  return {ScoreKind::SquaredError, 0.5};
}

ScoringFunction ScoringFunction::pinball(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw StructuralError("Pinball: level must lie in (0, 1)");
  }
  return {ScoreKind::Pinball, alpha};
}

double score(const ScoringFunction& s, double x, double y) {
  const double u = x - y;
  switch (s.kind) {
    case ScoreKind::SquaredError:
      return u * u;
    case ScoreKind::Pinball:
      return s.alpha * std::max(u, 0.0) + (1.0 - s.alpha) * std::max(-u, 0.0);
  }
  throw InternalError("score: unhandled kind");
}

double expected_score(const ScoringFunction& s, const Position& x,
                      const ScenarioMeasure& q, double y) {
  if (!same_space(x.space(), q.space())) {
    throw StructuralError("expected_score: inputs on different spaces");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    total += q[k] * score(s, x[k], y);
  }
  return total;
}

namespace {

/// Grid scan plus golden-section refinement around the best cell; ties go
/// left so flat pinball minima land on the inf-quantile.
double numeric_argmin(const ScoringFunction& s, const Position& x,
                      const ScenarioMeasure& q, std::size_t cells) {
  double lo = *std::min_element(x.values().begin(), x.values().end());
  double hi = *std::max_element(x.values().begin(), x.values().end());
  if (lo == hi) return lo;
  double best_y = lo;
  double best = expected_score(s, x, q, lo);
  const double h = (hi - lo) / static_cast<double>(cells);
  for (std::size_t c = 1; c <= cells; ++c) {
    const double y = lo + h * static_cast<double>(c);
    const double v = expected_score(s, x, q, y);
    if (v < best) {
      best = v;
      best_y = y;
    }
  }
  double a = std::max(lo, best_y - h);
  double b = std::min(hi, best_y + h);
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 80 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
    const double c = b - golden * (b - a);
    const double d = a + golden * (b - a);
    if (expected_score(s, x, q, c) <= expected_score(s, x, q, d)) {
      b = d;
    } else {
      a = c;
    }
  }
  const double refined = 0.5 * (a + b);
  return expected_score(s, x, q, refined) <= best ? refined : best_y;
}

}  // namespace

double elicit(const ScoringFunction& s, const Position& x,
              const ScenarioMeasure& q) {
  const Distribution f = distribution(x, q);
  double argmin = 0.0;
  switch (s.kind) {
    case ScoreKind::SquaredError:
      argmin = integrate_quantile(f, 0.0, 1.0);  // the mean
      break;
    case ScoreKind::Pinball:
      argmin = f.quantile(s.alpha);
      break;
  }

  // The closed form must score at least as well as the numeric minimizer.
  const double numeric = numeric_argmin(s, x, q, 4096);
  const double closed_value = expected_score(s, x, q, argmin);
  const double numeric_value = expected_score(s, x, q, numeric);
  const double tol = 1e-9 * (1.0 + std::abs(closed_value));
  if (closed_value > numeric_value + tol) {
    throw InternalError("elicit: closed form lost to the numeric minimizer");
  }
  return -argmin;
}

WorstCaseElicitation elicit_worst_case(
    const ScoringFunction& s, const Position& x,
    const std::vector<ScenarioMeasure>& scenarios,
    std::optional<double> resolution) {
  if (scenarios.empty()) {
    throw DomainError("elicit_worst_case: empty scenario set");
  }
  const double lo = *std::min_element(x.values().begin(), x.values().end());
  const double hi = *std::max_element(x.values().begin(), x.values().end());

  WorstCaseElicitation out;
  out.direct_max = -std::numeric_limits<double>::infinity();
  for (const auto& q : scenarios) {
    out.direct_max = std::max(out.direct_max, elicit(s, x, q));
  }

  if (lo == hi) {
    out.value = -lo;
    out.argmin = lo;
    out.resolution = 0.0;
    out.consistent = out.value == out.direct_max;
    return out;
  }

  const double r = resolution.value_or((hi - lo) / 1e6);
  out.resolution = r;

  const auto envelope = [&](double y) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : scenarios) {
      best = std::min(best, expected_score(s, x, q, y));
    }
    return best;
  };

  // Dense scan pins the global envelope level.
  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / r));
  double grid_y = lo;
  double grid_v = envelope(lo);
  for (std::size_t c = 1; c <= cells; ++c) {
    const double y = std::min(hi, lo + r * static_cast<double>(c));
    const double v = envelope(y);
    if (v < grid_v) {
      grid_v = v;
      grid_y = y;
    }
  }

  // Each branch is convex; ternary-search it, snap flat pinball minima to
  // the payoff values, and keep the branch's leftmost minimizer.
  std::vector<std::pair<double, double>> branch_minima;  // (argmin, value)
  for (const auto& q : scenarios) {
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13 * (1.0 + std::abs(a)); ++it) {
      const double c1 = a + (b - a) / 3.0;
      const double c2 = b - (b - a) / 3.0;
      if (expected_score(s, x, q, c1) <= expected_score(s, x, q, c2)) {
        b = c2;
      } else {
        a = c1;
      }
    }
    std::vector<double> candidates = x.values();
    candidates.push_back(0.5 * (a + b));
    candidates.push_back(lo);
    candidates.push_back(hi);
    double best_v = std::numeric_limits<double>::infinity();
    for (double y : candidates) {
      if (y < lo || y > hi) continue;
      best_v = std::min(best_v, expected_score(s, x, q, y));
    }
    double best_y = hi;
    for (double y : candidates) {
      if (y < lo || y > hi) continue;
      if (expected_score(s, x, q, y) <= best_v + 1e-12 * (1.0 + best_v)) {
        best_y = std::min(best_y, y);
      }
    }
    branch_minima.emplace_back(best_y, best_v);
  }

  // The envelope's minimum is the best branch minimum; ties go to the
  // leftmost argmin, matching the inf-quantile convention.
  double level = grid_v;
  for (const auto& [y, v] : branch_minima) level = std::min(level, v);
  const double tie_tol = 1e-9 * (1.0 + std::abs(level));
  double winner = grid_y;
  if (envelope(grid_y) > level + tie_tol) winner = hi;
  for (const auto& [y, v] : branch_minima) {
    if (v <= level + tie_tol) winner = std::min(winner, y);
  }

  out.argmin = winner;
  out.value = -winner;
  out.consistent = std::abs(out.value - out.direct_max) <= 2.0 * r;
  return out;
}

bool worst_case_aligned(const ScoringFunction& s, const Position& x,
                        const std::vector<ScenarioMeasure>& scenarios) {
  if (scenarios.empty()) {
    throw DomainError("worst_case_aligned: empty scenario set");
  }
  std::vector<double> elicited;
  std::vector<double> minimal_score;
  for (const auto& q : scenarios) {
    const double value = elicit(s, x, q);
    elicited.push_back(value);
    minimal_score.push_back(expected_score(s, x, q, -value));
  }
  const double best_score =
      *std::min_element(minimal_score.begin(), minimal_score.end());
  const double best_value =
      *std::max_element(elicited.begin(), elicited.end());
  const double tol = 1e-9 * (1.0 + std::abs(best_score) + std::abs(best_value));
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    if (minimal_score[i] <= best_score + tol &&
        elicited[i] >= best_value - tol) {
      return true;
    }
  }
  return false;
}

EsElicitReport es_conditional_mean_check(double alpha, const Position& x,
                                         const ScenarioMeasure& q) {
  if (!(alpha > 0.0) || !(alpha <= 1.0)) {
    throw DomainError("es_conditional_mean_check: level must be in (0, 1]");
  }
  const Distribution f = distribution(x, q);
  const double cutoff = f.quantile(alpha);
  double mass_at_or_below = 0.0;
  for (const auto& atom : f.atoms()) {
    if (atom.value <= cutoff) mass_at_or_below = atom.cum;
  }

  EsElicitReport report;
  report.applicable = std::abs(mass_at_or_below - alpha) <= 1e-12;
  report.es_value =
      risk_functional(RiskMeasureSpec::expected_shortfall(alpha), f);
  if (!report.applicable) return report;

  std::vector<double> reweighted(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] <= cutoff) reweighted[k] = q[k] / alpha;
  }
  double head = 0.0;
  std::size_t last = x.size();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (reweighted[k] > 0.0) last = k;
  }
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k != last) head += reweighted[k];
  }
  if (last < x.size()) reweighted[last] = 1.0 - head;

  const ScenarioMeasure qx(x.space(), std::move(reweighted));
  report.elicited = elicit(ScoringFunction::squared_error(), x, qx);
  report.gap = std::abs(report.elicited - report.es_value);
  return report;
}

}  // namespace riskcomb
