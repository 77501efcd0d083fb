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

#ifndef RISKCOMB_ELICIT_HPP
#define RISKCOMB_ELICIT_HPP

#include <optional>
#include <vector>

#include "riskcomb/measures.hpp"

namespace riskcomb {

enum class ScoreKind { SquaredError, Pinball };

/// Scoring functions whose expected-score minimizers elicit a risk measure:
/// (x - y)^2 recovers the mean (EL after negation), the pinball loss
/// a(x-y)^+ + (1-a)(x-y)^- recovers the a-quantile (VaR after negation).
struct ScoringFunction {
  ScoreKind kind = ScoreKind::SquaredError;
  double alpha = 0.5;  // pinball level, in (0, 1)

  static ScoringFunction squared_error();
  static ScoringFunction pinball(double alpha);
};

double score(const ScoringFunction& s, double x, double y);

double expected_score(const ScoringFunction& s, const Position& x,
                      const ScenarioMeasure& q, double y);

/// -argmin_y of the expected score, by closed form (mean or inf-quantile);
/// a grid plus golden-section minimizer cross-checks the closed form and an
/// InternalError flags any disagreement beyond the grid resolution.
double elicit(const ScoringFunction& s, const Position& x,
              const ScenarioMeasure& q);

struct WorstCaseElicitation {
  double value = 0.0;       // -argmin of the lower envelope
  double argmin = 0.0;
  double direct_max = 0.0;  // max over scenarios of the elicited values
  double resolution = 0.0;
  bool consistent = false;  // |value - direct_max| <= 2 * resolution
};

/// Minimizes min_i E_{Q_i}[S(X, y)] over [min X, max X] on a dense grid
/// (default resolution (max-min)/1e6) refined by ternary search on the
/// active branch, and compares against the per-scenario maximum.  The inner
/// infimum over the convex hull of the scenarios sits at a vertex because
/// expectations are linear in the measure.
WorstCaseElicitation elicit_worst_case(
    const ScoringFunction& s, const Position& x,
    const std::vector<ScenarioMeasure>& scenarios,
    std::optional<double> resolution = std::nullopt);

/// True when some scenario attains both the smallest minimal expected score
/// and the largest elicited value.  The envelope's minimum then sits on that
/// scenario's branch and the worst-case identity is guaranteed; on
/// misaligned families the envelope follows the cheapest branch instead and
/// elicit_worst_case reports the disagreement.
bool worst_case_aligned(const ScoringFunction& s, const Position& x,
                        const std::vector<ScenarioMeasure>& scenarios);

struct EsElicitReport {
  bool applicable = false;  // false when an atom straddles the alpha level
  double es_value = 0.0;
  double elicited = 0.0;
  double gap = 0.0;
};

/// ES as the elicited mean under the reweighted measure with density
/// (1/alpha) on {X <= F^{-1}(alpha)}; only defined when the alpha level
/// falls exactly on a cumulative boundary.
EsElicitReport es_conditional_mean_check(double alpha, const Position& x,
                                         const ScenarioMeasure& q);

}  // namespace riskcomb

#endif  // RISKCOMB_ELICIT_HPP
