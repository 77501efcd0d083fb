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

#include "riskcomb/prob_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "riskcomb/errors.hpp"

namespace riskcomb {

namespace {

constexpr double kMassTolerance = 1e-12;

void check_prob_vector(const std::vector<double>& probs, const char* what) {
  if (probs.empty()) {
    throw StructuralError(std::string(what) + ": needs at least one outcome");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw StructuralError(std::string(what) +
                            ": masses must be finite and nonnegative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw StructuralError(std::string(what) + ": masses sum to " +
                          std::to_string(total) + ", expected 1");
  }
}

}  // namespace

FiniteProbSpace::FiniteProbSpace(std::vector<std::string> outcome_ids,
                                 std::vector<double> base_probs)
    : outcome_ids_(std::move(outcome_ids)), base_probs_(std::move(base_probs)) {
  if (outcome_ids_.size() != base_probs_.size()) {
    throw StructuralError("FiniteProbSpace: id/probability length mismatch");
  }
  check_prob_vector(base_probs_, "FiniteProbSpace");
  std::unordered_set<std::string_view> seen;
  for (const auto& id : outcome_ids_) {
    if (!seen.insert(id).second) {
      throw StructuralError("FiniteProbSpace: duplicate outcome_id '" + id +
                            "'");
    }
  }
}

std::optional<std::size_t> FiniteProbSpace::index_of(
    std::string_view outcome_id) const {
  for (std::size_t k = 0; k < outcome_ids_.size(); ++k) {
    if (outcome_ids_[k] == outcome_id) return k;
  }
  return std::nullopt;
}

SpacePtr FiniteProbSpace::uniform(std::size_t n) {
  if (n == 0) throw StructuralError("FiniteProbSpace: empty space");
  std::vector<std::string> ids(n);
  std::vector<double> probs(n, 1.0 / static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) ids[k] = "w" + std::to_string(k + 1);
  // For n not a power of two the masses do not sum to exactly 1 in binary;
  // pin the last one so the invariant holds bit-for-bit.
  double head = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) head += probs[k];
  probs[n - 1] = 1.0 - head;
  return std::make_shared<FiniteProbSpace>(std::move(ids), std::move(probs));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->outcome_ids() == b->outcome_ids() &&
         a->base_probs() == b->base_probs();
}

Position::Position(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) throw StructuralError("Position: null space");
  if (values_.size() != space_->size()) {
    throw StructuralError("Position: expected " +
                          std::to_string(space_->size()) + " values, got " +
                          std::to_string(values_.size()));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw StructuralError("Position: values must be finite");
    }
  }
}

ScenarioMeasure::ScenarioMeasure(SpacePtr space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs)) {
  if (!space_) throw StructuralError("ScenarioMeasure: null space");
  if (probs_.size() != space_->size()) {
    throw StructuralError("ScenarioMeasure: expected " +
                          std::to_string(space_->size()) + " masses, got " +
                          std::to_string(probs_.size()));
  }
  check_prob_vector(probs_, "ScenarioMeasure");
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    if (space_->base_probs()[k] == 0.0 && probs_[k] != 0.0) {
      throw StructuralError(
          "ScenarioMeasure: mass on base-null outcome '" +
          space_->outcome_ids()[k] + "' (not absolutely continuous)");
    }
  }
}

ScenarioMeasure ScenarioMeasure::base(SpacePtr space) {
  auto probs = space->base_probs();
  return ScenarioMeasure(std::move(space), std::move(probs));
}

Distribution::Distribution(std::vector<DistributionAtom> atoms)
    : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw StructuralError("Distribution: no atoms");
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (atoms_[j].mass <= 0.0) {
      throw StructuralError("Distribution: atoms must carry positive mass");
    }
    if (j > 0 && !(atoms_[j].value > atoms_[j - 1].value)) {
      throw StructuralError("Distribution: atom values must be increasing");
    }
    if (j > 0 && !(atoms_[j].cum > atoms_[j - 1].cum)) {
      throw StructuralError("Distribution: cumulative masses must increase");
    }
  }
  if (std::abs(atoms_.back().cum - 1.0) > kMassTolerance) {
    throw StructuralError("Distribution: total mass must be 1");
  }
}

double Distribution::quantile(double alpha) const {
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw DomainError("quantile: level must lie in [0, 1]");
  }
  if (alpha == 0.0) return atoms_.front().value;
  for (const auto& atom : atoms_) {
    if (atom.cum >= alpha) return atom.value;
  }
  // Reachable only when rounding left cum slightly below alpha ~ 1.
  return atoms_.back().value;
}

bool Distribution::same_atoms(const Distribution& other) const {
  if (atoms_.size() != other.atoms_.size()) return false;
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    if (atoms_[j].value != other.atoms_[j].value ||
        atoms_[j].mass != other.atoms_[j].mass) {
      return false;
    }
  }
  return true;
}

Distribution distribution(const Position& x, const ScenarioMeasure& q) {
  if (!same_space(x.space(), q.space())) {
    throw StructuralError("distribution: position and scenario disagree");
  }
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b];
  });

  std::vector<DistributionAtom> atoms;
  atoms.reserve(n);
  for (std::size_t k : order) {
    if (q[k] == 0.0) continue;  // null outcomes never form atoms
    if (!atoms.empty() && atoms.back().value == x[k]) {
      atoms.back().mass += q[k];
    } else {
      atoms.push_back({x[k], q[k], 0.0});
    }
  }
  if (atoms.empty()) {
    throw InternalError("distribution: scenario carries no mass");
  }
  double cum = 0.0;
  for (auto& atom : atoms) {
    cum += atom.mass;
    atom.cum = cum;
  }
  atoms.back().cum = 1.0;  // guard the invariant against summation dust
  return Distribution(std::move(atoms));
}

double integrate_quantile(const Distribution& f, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi <= 1.0) || !(lo <= hi)) {
    throw DomainError("integrate_quantile: need 0 <= lo <= hi <= 1");
  }
  double total = 0.0;
  double prev_cum = 0.0;
  for (const auto& atom : f.atoms()) {
    const double a = std::max(prev_cum, lo);
    const double b = std::min(atom.cum, hi);
    if (b > a) {
      // A complete atom contributes value * mass, not value * (cum diff),
      // so the alpha = 1 integral matches the plain expectation exactly.
      const double len =
          (a == prev_cum && b == atom.cum) ? atom.mass : (b - a);
      total += atom.value * len;
    }
    prev_cum = atom.cum;
    if (prev_cum >= hi) break;
  }
  return total;
}

bool is_comonotone(const Position& x, const Position& y) {
  if (!same_space(x.space(), y.space())) {
    throw StructuralError("is_comonotone: positions on different spaces");
  }
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if ((x[a] - x[b]) * (y[a] - y[b]) < 0.0) return false;
    }
  }
  return true;
}

}  // namespace riskcomb
