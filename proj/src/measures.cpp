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

#include "riskcomb/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riskcomb/errors.hpp"

namespace riskcomb {

RiskMeasureSpec RiskMeasureSpec::expected_loss() {
  return RiskMeasureSpec(MeasureKind::ExpectedLoss);
}

RiskMeasureSpec RiskMeasureSpec::value_at_risk(double alpha) {
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw StructuralError("VaR: level must lie in [0, 1]");
  }
  RiskMeasureSpec spec(MeasureKind::ValueAtRisk);
  spec.alpha_ = alpha;
  return spec;
}

RiskMeasureSpec RiskMeasureSpec::expected_shortfall(double alpha) {
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw StructuralError("ES: level must lie in [0, 1]");
  }
  RiskMeasureSpec spec(MeasureKind::ExpectedShortfall);
  spec.alpha_ = alpha;
  return spec;
}

RiskMeasureSpec RiskMeasureSpec::max_loss() {
  return RiskMeasureSpec(MeasureKind::MaxLoss);
}

RiskMeasureSpec RiskMeasureSpec::spectral(Spectrum phi) {
  RiskMeasureSpec spec(MeasureKind::Spectral);
  spec.spectrum_ = std::move(phi);
  return spec;
}

RiskMeasureSpec RiskMeasureSpec::es_mixture(EsMixtureMeasure m) {
  RiskMeasureSpec spec(MeasureKind::EsMixture);
  spec.mixture_ = std::move(m);
  return spec;
}

double RiskMeasureSpec::alpha() const {
  if (kind_ != MeasureKind::ValueAtRisk &&
      kind_ != MeasureKind::ExpectedShortfall) {
    throw InternalError("RiskMeasureSpec: kind carries no level");
  }
  return alpha_;
}

const Spectrum& RiskMeasureSpec::spectrum() const {
  if (!spectrum_) throw InternalError("RiskMeasureSpec: not spectral");
  return *spectrum_;
}

const EsMixtureMeasure& RiskMeasureSpec::mixture() const {
  if (!mixture_) throw InternalError("RiskMeasureSpec: not a mixture");
  return *mixture_;
}

bool RiskMeasureSpec::is_coherent() const {
  switch (kind_) {
    case MeasureKind::ExpectedLoss:
    case MeasureKind::MaxLoss:
    case MeasureKind::EsMixture:
      return true;
    case MeasureKind::ExpectedShortfall:
      return true;
    case MeasureKind::ValueAtRisk:
      return false;
    case MeasureKind::Spectral:
      return spectrum_->nonincreasing();
  }
  return false;
}

bool RiskMeasureSpec::is_comonotone_additive() const {
  // Every kind decomposes over comonotone sums on finite spaces with
  // uniform atoms; this is the list the checkers may rely on.
  return true;
}

std::optional<EsMixtureMeasure> RiskMeasureSpec::kusuoka_measure() const {
  switch (kind_) {
    case MeasureKind::ExpectedLoss:
      return EsMixtureMeasure::dirac(Rational(1));
    case MeasureKind::ExpectedShortfall:
      if (alpha_ == 0.0) return std::nullopt;
      return EsMixtureMeasure::dirac(Rational(alpha_));
    case MeasureKind::Spectral:
      if (!spectrum_->nonincreasing()) return std::nullopt;
      return m_from_phi(*spectrum_);
    case MeasureKind::EsMixture:
      return mixture_;
    case MeasureKind::ValueAtRisk:
    case MeasureKind::MaxLoss:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string RiskMeasureSpec::label() const {
  std::ostringstream out;
  switch (kind_) {
    case MeasureKind::ExpectedLoss:
      return "EL";
    case MeasureKind::ValueAtRisk:
      out << "VaR(" << alpha_ << ")";
      return out.str();
    case MeasureKind::ExpectedShortfall:
      out << "ES(" << alpha_ << ")";
      return out.str();
    case MeasureKind::MaxLoss:
      return "ML";
    case MeasureKind::Spectral: {
      out << "Spectral[";
      bool first = true;
      for (const auto& [start, level] : spectrum_->steps()) {
        if (!first) out << ",";
        out << to_double(start) << ":" << to_double(level);
        first = false;
      }
      out << "]";
      return out.str();
    }
    case MeasureKind::EsMixture: {
      out << "ESMix[";
      bool first = true;
      for (const auto& [alpha, mass] : mixture_->atoms()) {
        if (!first) out << ",";
        out << to_double(alpha) << ":" << to_double(mass);
        first = false;
      }
      out << "]";
      return out.str();
    }
  }
  return "?";
}

namespace {

double expected_shortfall_value(double alpha, const Distribution& f) {
  if (alpha == 0.0) return -f.quantile(0.0);
  return -(integrate_quantile(f, 0.0, alpha) / alpha);
}

double spectral_value(const Spectrum& phi, const Distribution& f) {
  // Atom by atom: each quantile piece (cum_{j-1}, cum_j] is weighted by the
  // exact mass phi puts there.  Cumulative probabilities convert to
  // rationals losslessly, so pieces are never misclassified against the
  // spectrum's breakpoints.
  double total = 0.0;
  Rational prev_weight(0);
  for (const auto& atom : f.atoms()) {
    const Rational weight = phi.integral_to(Rational(atom.cum));
    total += atom.value * to_double(weight - prev_weight);
    prev_weight = weight;
  }
  return -total;
}

}  // namespace

RiskValue risk_functional(const RiskMeasureSpec& spec, const Distribution& f) {
  switch (spec.kind()) {
    case MeasureKind::ExpectedLoss:
      return -integrate_quantile(f, 0.0, 1.0);
    case MeasureKind::ValueAtRisk:
      return -f.quantile(spec.alpha());
    case MeasureKind::ExpectedShortfall:
      return expected_shortfall_value(spec.alpha(), f);
    case MeasureKind::MaxLoss:
      return -f.quantile(0.0);
    case MeasureKind::Spectral:
      return spectral_value(spec.spectrum(), f);
    case MeasureKind::EsMixture: {
      double total = 0.0;
      for (const auto& [alpha, mass] : spec.mixture().atoms()) {
        total += to_double(mass) * expected_shortfall_value(to_double(alpha), f);
      }
      return total;
    }
  }
  throw InternalError("risk_functional: unhandled kind");
}

RiskValue evaluate(const RiskMeasureSpec& spec, const Position& x,
                   const ScenarioMeasure& q) {
  return risk_functional(spec, distribution(x, q));
}

bool es_saturates_at_max_loss(const RiskMeasureSpec& spec,
                              const Distribution& f) {
  if (spec.kind() != MeasureKind::ExpectedShortfall) return false;
  return spec.alpha() > 0.0 && spec.alpha() <= f.atoms().front().cum;
}

std::vector<Component> make_components(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios) {
  if (specs.empty() || scenarios.empty()) {
    throw DomainError("components: the index set must be non-empty");
  }
  std::vector<Component> components;
  if (specs.size() == 1) {
    for (const auto& q : scenarios) components.push_back({specs[0], q});
  } else if (scenarios.size() == 1) {
    for (const auto& spec : specs) components.push_back({spec, scenarios[0]});
  } else {
    throw StructuralError(
        "components: use one spec across scenarios or many specs under one "
        "scenario");
  }
  return components;
}

RiskProfile profile(const std::vector<RiskMeasureSpec>& specs,
                    const std::vector<ScenarioMeasure>& scenarios,
                    const Position& x) {
  RiskProfile result;
  for (const auto& [spec, scenario] : make_components(specs, scenarios)) {
    result.entries.push_back(evaluate(spec, x, scenario));
  }
  return result;
}

bool cross_law_invariance_check(const RiskMeasureSpec& spec, const Position& x,
                                const ScenarioMeasure& q1, const Position& y,
                                const ScenarioMeasure& q2) {
  const Distribution fx = distribution(x, q1);
  const Distribution fy = distribution(y, q2);
  if (!fx.same_atoms(fy)) return true;  // antecedent false
  return risk_functional(spec, fx) == risk_functional(spec, fy);
}

}  // namespace riskcomb
