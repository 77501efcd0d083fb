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

#ifndef RISKCOMB_DUALITY_HPP
#define RISKCOMB_DUALITY_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "riskcomb/combinators.hpp"
#include "riskcomb/measures.hpp"

namespace riskcomb {

inline constexpr double kInfinitePenalty =
    std::numeric_limits<double>::infinity();

enum class LpMode { Fast, Exact };

/// Minimal penalty of a coherent measure at q: 0 when q lies in the dual
/// set relative to the reference measure, +infinity otherwise.
///
///   EL        {reference}
///   ES(a)     densities dq/dref <= 1/a
///   ML        every q << reference
///   Spectral  prefix sums of the descending-density rearrangement stay
///             below the integral of phi (checked at the sort breakpoints,
///             which suffices because that integral is concave)
///   EsMixture via its spectrum
///
/// Non-coherent specs (VaR, increasing spectra) are unsupported.
double min_penalty(const RiskMeasureSpec& spec, const ScenarioMeasure& q,
                   const ScenarioMeasure& reference);

/// Reference defaults to the base measure of q's space.
double min_penalty(const RiskMeasureSpec& spec, const ScenarioMeasure& q);

struct DualCertificate {
  double value = 0.0;
  ScenarioMeasure maximizer;
};

/// sup E_Q[-X] over the dual set, by the Hardy-Littlewood greedy
/// construction: outcomes sorted by ascending payoff (ties by index) receive
/// the largest admissible density first.  Returns the supremum and the
/// maximizing measure as a certificate.
DualCertificate dual_evaluate(const RiskMeasureSpec& spec, const Position& x,
                              const ScenarioMeasure& reference);
DualCertificate dual_evaluate(const RiskMeasureSpec& spec, const Position& x);

/// Same construction in exact rational arithmetic, for oracle suites.
Rational dual_evaluate_exact(const RiskMeasureSpec& spec, const Position& x,
                             const ScenarioMeasure& reference);

struct GammaReport {
  double value = 0.0;                // closed form: 0 or +infinity
  double sampled_lower_bound = 0.0;  // sup over sampled R of <mu,R> - f(R)
  bool consistent = false;           // sampled bound <= closed form
};

/// Penalty of the combination function at mu.  Closed forms: 0 everywhere
/// for WorstCase; 0 only at the mixture's own weights; for coherent
/// utilities, membership of mu in the utility's dual weight set.  A sampled
/// lower bound certifies consistency.
GammaReport gamma_f(const CombinationSpec& f, const IndexWeight& mu,
                    std::uint64_t seed, std::size_t trials = 2000);

struct MixturePenaltyResult {
  double penalty = kInfinitePenalty;
  // One decomposition measure per component when feasible (zero-weight
  // components get their own scenario, which always belongs to the set).
  std::vector<std::vector<double>> component_measures;
};

/// 0 iff q splits as sum(mu_i * Q^i) with every Q^i in component i's dual
/// set; decided by the in-repo simplex (phase 1 only).
MixturePenaltyResult mixture_penalty_detail(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios, const IndexWeight& mu,
    const ScenarioMeasure& q, LpMode mode = LpMode::Fast);

double mixture_penalty(const std::vector<RiskMeasureSpec>& specs,
                       const std::vector<ScenarioMeasure>& scenarios,
                       const IndexWeight& mu, const ScenarioMeasure& q,
                       LpMode mode = LpMode::Fast);

struct DualCheckReport {
  double lhs = 0.0;  // compose(f, ...)
  double rhs = 0.0;  // LP maximum of E_Q[-X] over the composed dual set
  double gap = 0.0;
  bool passed = false;
  ScenarioMeasure certificate;
};

/// Verifies the composed dual representation for coherent components and a
/// positively homogeneous coherent f: the direct evaluation must match the
/// LP maximum over the decomposable dual polytope within tol.
DualCheckReport composed_dual_check(const CombinationSpec& f,
                                    const std::vector<RiskMeasureSpec>& specs,
                                    const std::vector<ScenarioMeasure>& scenarios,
                                    const Position& x, double tol = 1e-8);

struct WorstCasePenaltyReport {
  double membership_inf = kInfinitePenalty;  // inf_i of min_penalty
  double lp_inf = kInfinitePenalty;          // inf over vertex weights of the LP
  bool consistent = false;
};

/// The worst-case penalty collapse: the infimum of component penalties at q
/// equals the decomposition-LP infimum over point-mass weights.
WorstCasePenaltyReport worst_case_penalty_check(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios, const ScenarioMeasure& q);

}  // namespace riskcomb

#endif  // RISKCOMB_DUALITY_HPP
