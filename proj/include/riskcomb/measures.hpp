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

#ifndef RISKCOMB_MEASURES_HPP
#define RISKCOMB_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "riskcomb/prob_core.hpp"
#include "riskcomb/spectrum.hpp"

namespace riskcomb {

enum class MeasureKind {
  ExpectedLoss,
  ValueAtRisk,
  ExpectedShortfall,
  MaxLoss,
  Spectral,
  EsMixture,
};

/// Tagged description of a risk functional applied to the distribution of a
/// position under a scenario:
///
///   EL      -E[X]
///   VaR(a)  -F^{-1}(a)                     (inf-quantile, a in [0, 1])
///   ES(a)   (1/a) * integral of VaR^s ds over [0, a]; ES(0) = ML
///   ML      -F^{-1}(0)
///   Spectral(phi)   integral of VaR^a phi(a) da
///   EsMixture(m)    sum m_j * ES(alpha_j)
class RiskMeasureSpec {
 public:
  static RiskMeasureSpec expected_loss();
  static RiskMeasureSpec value_at_risk(double alpha);
  static RiskMeasureSpec expected_shortfall(double alpha);
  static RiskMeasureSpec max_loss();
  static RiskMeasureSpec spectral(Spectrum phi);
  static RiskMeasureSpec es_mixture(EsMixtureMeasure m);

  MeasureKind kind() const { return kind_; }
  double alpha() const;
  const Spectrum& spectrum() const;
  const EsMixtureMeasure& mixture() const;

  /// Coherent kinds: EL, ES, ML, nonincreasing Spectral, EsMixture.  VaR and
  /// increasing spectra are excluded (no convexity).
  bool is_coherent() const;

  bool is_comonotone_additive() const;

  /// The ES-mixture representation, for the kinds that have one on (0, 1]:
  /// EL -> dirac(1), ES(a > 0) -> dirac(a), Spectral -> m_from_phi,
  /// EsMixture -> itself.  Empty for VaR, ML and ES(0).
  std::optional<EsMixtureMeasure> kusuoka_measure() const;

  std::string label() const;

 private:
  explicit RiskMeasureSpec(MeasureKind kind) : kind_(kind) {}

  MeasureKind kind_;
  double alpha_ = 0.0;
  std::optional<Spectrum> spectrum_;
  std::optional<EsMixtureMeasure> mixture_;
};

/// Monetary loss figure; positive values mean risk.
using RiskValue = double;

/// The risk functional applied directly to a distribution function, the
/// scenario-free core of evaluate().  All kinds are computed from the sorted
/// atoms, which makes cross law invariance hold by construction.
RiskValue risk_functional(const RiskMeasureSpec& spec, const Distribution& f);

RiskValue evaluate(const RiskMeasureSpec& spec, const Position& x,
                   const ScenarioMeasure& q);

/// True when an ES level sits at or below the first atom's mass, where the
/// value saturates at the maximum loss.
bool es_saturates_at_max_loss(const RiskMeasureSpec& spec,
                              const Distribution& f);

/// One risk measure per index: either one spec broadcast over scenarios or
/// several specs under one scenario.
struct Component {
  RiskMeasureSpec spec;
  ScenarioMeasure scenario;
};

std::vector<Component> make_components(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios);

/// Risk profile R_X over the finite index set, order-stable.
struct RiskProfile {
  std::vector<double> entries;
};

RiskProfile profile(const std::vector<RiskMeasureSpec>& specs,
                    const std::vector<ScenarioMeasure>& scenarios,
                    const Position& x);

/// If X under q1 and Y under q2 have atom-identical distributions, their
/// risk values must coincide; returns whether the implication held (it is
/// vacuously true when the distributions differ).
bool cross_law_invariance_check(const RiskMeasureSpec& spec, const Position& x,
                                const ScenarioMeasure& q1, const Position& y,
                                const ScenarioMeasure& q2);

}  // namespace riskcomb

#endif  // RISKCOMB_MEASURES_HPP
