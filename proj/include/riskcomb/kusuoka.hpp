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

#ifndef RISKCOMB_KUSUOKA_HPP
#define RISKCOMB_KUSUOKA_HPP

#include <string>
#include <vector>

#include "riskcomb/combinators.hpp"
#include "riskcomb/measures.hpp"
#include "riskcomb/spectrum.hpp"

namespace riskcomb {

/// sum m_j * ES(alpha_j) of x under q.
double es_mixture_evaluate(const EsMixtureMeasure& m, const Position& x,
                           const ScenarioMeasure& q);

struct LawInvariantCheckReport {
  double lhs = 0.0;                 // the composed risk measure at x
  double value_at_optimizer = 0.0;  // ES-mixture value at the analytic m
  double sweep_max = 0.0;           // best over vertex weights x candidate m
  double gap = 0.0;                 // sweep_max - lhs
  bool passed = false;
  std::string optimizer;
};

/// Verifies the ES-mixture reading of a composed probability-based measure
/// for one comonotone coherent spec under several scenarios.  The candidate
/// values are sum_j m_j * ES^mu_{alpha_j}(X) with
/// ES^mu_alpha = sum_i mu_i ES^{Q_i}_alpha (mixture of per-scenario ES, not
/// ES under the mixed measure).  For f = Mixture the spec's own mixture
/// measure attains the value exactly; for f = WorstCase only the bound
/// lhs <= sweep_max is asserted and the gap is reported, since the
/// unpenalized sweep may exceed the worst case.
LawInvariantCheckReport law_invariant_composed_check(
    const CombinationSpec& f, const RiskMeasureSpec& spec,
    const std::vector<ScenarioMeasure>& scenarios, const Position& x,
    const std::vector<double>& alpha_grid, double tol = 1e-10);

/// 0 iff sum mu_i m_i equals m atom-exactly on the merged support.
double beta_penalty(const std::vector<EsMixtureMeasure>& component_measures,
                    const IndexWeight& mu, const EsMixtureMeasure& m);

struct MixedScenarioReport {
  double rho_mixed = 0.0;    // spec under the mixed measure sum mu_i Q_i
  double rho_mixture = 0.0;  // mu-mixture of per-scenario values
  double gap = 0.0;          // rho_mixed - rho_mixture, >= 0 for convex kinds
};

/// The risk functional is concave over distribution functions, so mixing
/// scenarios before evaluating dominates mixing the values, with equality
/// exactly for EL.
MixedScenarioReport mixed_scenario_gap(
    const RiskMeasureSpec& spec, const std::vector<ScenarioMeasure>& scenarios,
    const std::vector<double>& weights, const Position& x);

}  // namespace riskcomb

#endif  // RISKCOMB_KUSUOKA_HPP
