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

#include "riskcomb/kusuoka.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskcomb/duality.hpp"
#include "riskcomb/errors.hpp"

namespace riskcomb {

double es_mixture_evaluate(const EsMixtureMeasure& m, const Position& x,
                           const ScenarioMeasure& q) {
  return evaluate(RiskMeasureSpec::es_mixture(m), x, q);
}

namespace {

double es_at(const Distribution& f, double alpha) {
  return risk_functional(RiskMeasureSpec::expected_shortfall(alpha), f);
}

/// sum_j m_j * ES^mu_{alpha_j} with ES^mu_alpha = sum_i mu_i ES^{Q_i}_alpha.
double mixture_es_value(const EsMixtureMeasure& m,
                        const std::vector<Distribution>& dists,
                        const std::vector<double>& mu) {
  double total = 0.0;
  for (const auto& [alpha, mass] : m.atoms()) {
    const double a = to_double(alpha);
    double es_mu = 0.0;
    for (std::size_t i = 0; i < dists.size(); ++i) {
      es_mu += mu[i] * es_at(dists[i], a);
    }
    total += to_double(mass) * es_mu;
  }
  return total;
}

}  // namespace

LawInvariantCheckReport law_invariant_composed_check(
    const CombinationSpec& f, const RiskMeasureSpec& spec,
    const std::vector<ScenarioMeasure>& scenarios, const Position& x,
    const std::vector<double>& alpha_grid, double tol) {
  if (f.kind() == CombinationKind::UtilityOfProfile) {
    throw UnsupportedError(
        "law_invariant_composed_check: supports WorstCase and Mixture only");
  }
  const auto own = spec.kusuoka_measure();
  if (!own) {
    throw UnsupportedError("law_invariant_composed_check: '" + spec.label() +
                           "' has no ES-mixture form");
  }
  if (scenarios.empty()) {
    throw DomainError("law_invariant_composed_check: no scenarios");
  }

  std::vector<Distribution> dists;
  dists.reserve(scenarios.size());
  for (const auto& q : scenarios) dists.push_back(distribution(x, q));

  std::vector<EsMixtureMeasure> candidates;
  candidates.push_back(*own);
  for (double alpha : alpha_grid) {
    if (alpha > 0.0 && alpha <= 1.0) {
      candidates.push_back(EsMixtureMeasure::dirac(Rational(alpha)));
    }
  }

  std::vector<std::vector<double>> vertex_weights;
  if (f.kind() == CombinationKind::Mixture) {
    vertex_weights.push_back(f.weights().weights());
  } else {
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      std::vector<double> delta(scenarios.size(), 0.0);
      delta[i] = 1.0;
      vertex_weights.push_back(std::move(delta));
    }
  }

  LawInvariantCheckReport report;
  report.lhs = compose(f, {spec}, scenarios, x);
  report.optimizer = RiskMeasureSpec::es_mixture(*own).label();

  double at_optimizer = -std::numeric_limits<double>::infinity();
  double sweep = -std::numeric_limits<double>::infinity();
  for (const auto& mu : vertex_weights) {
    at_optimizer = std::max(at_optimizer, mixture_es_value(*own, dists, mu));
    for (const auto& m : candidates) {
      sweep = std::max(sweep, mixture_es_value(m, dists, mu));
    }
  }
  report.value_at_optimizer = at_optimizer;
  report.sweep_max = sweep;
  report.gap = sweep - report.lhs;

  if (f.kind() == CombinationKind::Mixture) {
    report.passed = std::abs(report.lhs - report.value_at_optimizer) <= tol;
  } else {
    report.passed = report.lhs <= report.sweep_max + tol;
  }
  return report;
}

double beta_penalty(const std::vector<EsMixtureMeasure>& component_measures,
                    const IndexWeight& mu, const EsMixtureMeasure& m) {
  if (component_measures.empty() || component_measures.size() != mu.size()) {
    throw StructuralError("beta_penalty: one measure per weight");
  }
  const EsMixtureMeasure mixed =
      mixture_of_measures(component_measures, mu.weights());
  return mixed == m ? 0.0 : kInfinitePenalty;
}

MixedScenarioReport mixed_scenario_gap(
    const RiskMeasureSpec& spec, const std::vector<ScenarioMeasure>& scenarios,
    const std::vector<double>& weights, const Position& x) {
  if (scenarios.empty() || scenarios.size() != weights.size()) {
    throw StructuralError("mixed_scenario_gap: one weight per scenario");
  }
  const IndexWeight mu(weights);  // validates the weights
  const std::size_t n = x.size();
  std::vector<double> mixed(n, 0.0);
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      mixed[k] += weights[i] * scenarios[i][k];
    }
  }
  double head = 0.0;
  std::size_t last = n;
  for (std::size_t k = 0; k < n; ++k) {
    if (mixed[k] > 0.0) last = k;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k != last) head += mixed[k];
  }
  if (last < n) mixed[last] = 1.0 - head;

  MixedScenarioReport report;
  report.rho_mixed =
      evaluate(spec, x, ScenarioMeasure(x.space(), std::move(mixed)));
  report.rho_mixture = 0.0;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    report.rho_mixture += weights[i] * evaluate(spec, x, scenarios[i]);
  }
  report.gap = report.rho_mixed - report.rho_mixture;
  return report;
}

}  // namespace riskcomb
