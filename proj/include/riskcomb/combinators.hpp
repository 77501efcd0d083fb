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

#ifndef RISKCOMB_COMBINATORS_HPP
#define RISKCOMB_COMBINATORS_HPP

#include <optional>
#include <string>
#include <vector>

#include "riskcomb/measures.hpp"

namespace riskcomb {

/// Probability vector mu on the finite index set.
class IndexWeight {
 public:
  explicit IndexWeight(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }

  static IndexWeight uniform(std::size_t n);
  static IndexWeight dirac(std::size_t n, std::size_t i);

 private:
  std::vector<double> weights_;
};

enum class CombinationKind { WorstCase, Mixture, UtilityOfProfile };

/// Combination function f applied to risk profiles:
///
///   WorstCase              max over entries
///   Mixture(mu)            sum mu_i R_i
///   UtilityOfProfile(pi, mu)  pi applied to -R on the index space (I, mu);
///       pi is restricted to EL, VaR(a), ES(a), ML, which give the closed
///       forms sum mu_i R_i, F^{-1}_{R,mu}(1-a),
///       (1/a) * integral over [0,a] of F^{-1}_{R,mu}(1-s) ds, and
///       ess sup_mu R.
class CombinationSpec {
 public:
  static CombinationSpec worst_case();
  static CombinationSpec mixture(IndexWeight mu);
  static CombinationSpec utility_of_profile(RiskMeasureSpec pi, IndexWeight mu);

  CombinationKind kind() const { return kind_; }
  const IndexWeight& weights() const;
  const RiskMeasureSpec& pi() const;

  /// Dimension pinned by the weights; empty for WorstCase.
  std::optional<std::size_t> dimension() const;

  bool is_positively_homogeneous() const { return true; }

  /// Monotone + translation invariant + convex + positively homogeneous:
  /// everything except the VaR utility.
  bool is_coherent_combination() const;

  std::string label() const;

 private:
  explicit CombinationSpec(CombinationKind kind) : kind_(kind) {}

  CombinationKind kind_;
  std::optional<IndexWeight> weights_;
  std::optional<RiskMeasureSpec> pi_;
};

double combine(const CombinationSpec& f, const RiskProfile& r);

/// f applied to the risk profile of x: the composed risk measure rho(X).
double compose(const CombinationSpec& f,
               const std::vector<RiskMeasureSpec>& specs,
               const std::vector<ScenarioMeasure>& scenarios,
               const Position& x);

/// A composed risk measure bundled with its components, the unit the
/// checkers and the dual-representation verifiers operate on.
struct RiskBundle {
  CombinationSpec f;
  std::vector<RiskMeasureSpec> specs;
  std::vector<ScenarioMeasure> scenarios;

  double operator()(const Position& x) const {
    return compose(f, specs, scenarios, x);
  }
  std::vector<Component> components() const {
    return make_components(specs, scenarios);
  }
  const SpacePtr& space() const { return scenarios.front().space(); }
};

}  // namespace riskcomb

#endif  // RISKCOMB_COMBINATORS_HPP
