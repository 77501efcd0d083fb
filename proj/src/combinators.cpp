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

#include "riskcomb/combinators.hpp"

#include <algorithm>
#include <cmath>

#include "riskcomb/errors.hpp"

namespace riskcomb {

IndexWeight::IndexWeight(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw StructuralError("IndexWeight: needs at least one entry");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw StructuralError("IndexWeight: entries must be >= 0");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw StructuralError("IndexWeight: entries must sum to 1");
  }
}

IndexWeight IndexWeight::uniform(std::size_t n) {
  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  double head = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) head += w[k];
  w[n - 1] = 1.0 - head;
  return IndexWeight(std::move(w));
}

IndexWeight IndexWeight::dirac(std::size_t n, std::size_t i) {
  std::vector<double> w(n, 0.0);
  w.at(i) = 1.0;
  return IndexWeight(std::move(w));
}

CombinationSpec CombinationSpec::worst_case() {
  return CombinationSpec(CombinationKind::WorstCase);
}

CombinationSpec CombinationSpec::mixture(IndexWeight mu) {
  CombinationSpec f(CombinationKind::Mixture);
  f.weights_ = std::move(mu);
  return f;
}

CombinationSpec CombinationSpec::utility_of_profile(RiskMeasureSpec pi,
                                                    IndexWeight mu) {
  switch (pi.kind()) {
    case MeasureKind::ExpectedLoss:
    case MeasureKind::ValueAtRisk:
    case MeasureKind::ExpectedShortfall:
    case MeasureKind::MaxLoss:
      break;
    default:
      throw StructuralError(
          "UtilityOfProfile: pi must be EL, VaR, ES or ML");
  }
  CombinationSpec f(CombinationKind::UtilityOfProfile);
  f.pi_ = std::move(pi);
  f.weights_ = std::move(mu);
  return f;
}

const IndexWeight& CombinationSpec::weights() const {
  if (!weights_) throw InternalError("CombinationSpec: no weights");
  return *weights_;
}

const RiskMeasureSpec& CombinationSpec::pi() const {
  if (!pi_) throw InternalError("CombinationSpec: no utility");
  return *pi_;
}

std::optional<std::size_t> CombinationSpec::dimension() const {
  if (weights_) return weights_->size();
  return std::nullopt;
}

bool CombinationSpec::is_coherent_combination() const {
  if (kind_ != CombinationKind::UtilityOfProfile) return true;
  return pi_->kind() != MeasureKind::ValueAtRisk;
}

std::string CombinationSpec::label() const {
  switch (kind_) {
    case CombinationKind::WorstCase:
      return "WorstCase";
    case CombinationKind::Mixture:
      return "Mixture";
    case CombinationKind::UtilityOfProfile:
      return "UtilityOfProfile(" + pi_->label() + ")";
  }
  return "?";
}

namespace {

/// Distribution of the profile under mu on the index space.
Distribution profile_distribution(const RiskProfile& r, const IndexWeight& mu) {
  std::vector<std::string> ids(r.entries.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = "i" + std::to_string(i + 1);
  }
  auto space = std::make_shared<FiniteProbSpace>(std::move(ids), mu.weights());
  Position as_position(space, r.entries);
  return distribution(as_position, ScenarioMeasure::base(space));
}

double utility_value(const RiskMeasureSpec& pi, const IndexWeight& mu,
                     const RiskProfile& r) {
  const Distribution d = profile_distribution(r, mu);
  switch (pi.kind()) {
    case MeasureKind::ExpectedLoss:
      return integrate_quantile(d, 0.0, 1.0);
    case MeasureKind::ValueAtRisk:
      return d.quantile(1.0 - pi.alpha());
    case MeasureKind::ExpectedShortfall: {
      const double alpha = pi.alpha();
      if (alpha == 0.0) return d.max_value();
      return integrate_quantile(d, 1.0 - alpha, 1.0) / alpha;
    }
    case MeasureKind::MaxLoss:
      return d.max_value();
    default:
      throw InternalError("utility_value: unsupported pi");
  }
}

}  // namespace

double combine(const CombinationSpec& f, const RiskProfile& r) {
  if (r.entries.empty()) throw DomainError("combine: empty profile");
  for (double v : r.entries) {
    if (!std::isfinite(v)) throw StructuralError("combine: profile not finite");
  }
  switch (f.kind()) {
    case CombinationKind::WorstCase:
      return *std::max_element(r.entries.begin(), r.entries.end());
    case CombinationKind::Mixture: {
      const auto& mu = f.weights();
      if (mu.size() != r.entries.size()) {
        throw StructuralError("combine: weight/profile length mismatch");
      }
      double total = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        total += mu[i] * r.entries[i];
      }
      return total;
    }
    case CombinationKind::UtilityOfProfile: {
      const auto& mu = f.weights();
      if (mu.size() != r.entries.size()) {
        throw StructuralError("combine: weight/profile length mismatch");
      }
      return utility_value(f.pi(), mu, r);
    }
  }
  throw InternalError("combine: unhandled kind");
}

double compose(const CombinationSpec& f,
               const std::vector<RiskMeasureSpec>& specs,
               const std::vector<ScenarioMeasure>& scenarios,
               const Position& x) {
  return combine(f, profile(specs, scenarios, x));
}

}  // namespace riskcomb
