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

#ifndef RISKCOMB_PROB_CORE_HPP
#define RISKCOMB_PROB_CORE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace riskcomb {

/// Finite outcome space with a base probability vector.  All positions and
/// scenario measures are index-aligned with one of these.  Immutable after
/// construction.
class FiniteProbSpace {
 public:
  FiniteProbSpace(std::vector<std::string> outcome_ids,
                  std::vector<double> base_probs);

  std::size_t size() const { return base_probs_.size(); }
  const std::vector<std::string>& outcome_ids() const { return outcome_ids_; }
  const std::vector<double>& base_probs() const { return base_probs_; }
  std::optional<std::size_t> index_of(std::string_view outcome_id) const;

  /// Uniform space with ids "w1".."wn".
  static std::shared_ptr<const FiniteProbSpace> uniform(std::size_t n);

 private:
  std::vector<std::string> outcome_ids_;
  std::vector<double> base_probs_;
};

using SpacePtr = std::shared_ptr<const FiniteProbSpace>;

bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Payoff vector, one finite monetary value per outcome.
class Position {
 public:
  Position(SpacePtr space, std::vector<double> values);

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  SpacePtr space_;
  std::vector<double> values_;
};

/// Probability vector on the same outcomes as the owning space, absolutely
/// continuous with respect to the base vector (zero wherever base is zero).
class ScenarioMeasure {
 public:
  ScenarioMeasure(SpacePtr space, std::vector<double> probs);

  const SpacePtr& space() const { return space_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }

  /// The base measure of the space, viewed as a scenario.
  static ScenarioMeasure base(SpacePtr space);

 private:
  SpacePtr space_;
  std::vector<double> probs_;
};

struct DistributionAtom {
  double value = 0.0;  // payoff level
  double mass = 0.0;   // probability carried by this level (> 0)
  double cum = 0.0;    // running total, last atom reaches 1
};

/// Distribution function of a position under a scenario: atoms sorted by
/// value with equal payoffs merged and zero-mass outcomes dropped.  Houses
/// both F (via cum) and the inf-quantile F^{-1}.
class Distribution {
 public:
  explicit Distribution(std::vector<DistributionAtom> atoms);

  const std::vector<DistributionAtom>& atoms() const { return atoms_; }

  /// F^{-1}(alpha) = inf{x : F(x) >= alpha}; quantile(0) is the smallest
  /// support value so that the maximum-loss convention -F^{-1}(0) is total.
  double quantile(double alpha) const;

  double min_value() const { return atoms_.front().value; }
  double max_value() const { return atoms_.back().value; }

  /// Exact atom-level equality (value and mass per atom).
  bool same_atoms(const Distribution& other) const;

 private:
  std::vector<DistributionAtom> atoms_;
};

Distribution distribution(const Position& x, const ScenarioMeasure& q);

/// Integral of the step quantile over [lo, hi] within [0, 1], computed piece
/// by piece from the atoms; a complete atom contributes value * mass so that
/// the full-range integral reproduces the dot product exactly.
double integrate_quantile(const Distribution& f, double lo, double hi);

/// (X(w) - X(w'))(Y(w) - Y(w')) >= 0 for all outcome pairs.
bool is_comonotone(const Position& x, const Position& y);

}  // namespace riskcomb

#endif  // RISKCOMB_PROB_CORE_HPP
