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

#include "riskcomb/json_io.hpp"

#include "riskcomb/errors.hpp"

namespace riskcomb {

namespace {

double number_field(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ParseError(std::string("spec: missing numeric field '") + field +
                     "'");
  }
  return j[field].get<double>();
}

std::vector<std::pair<double, double>> pair_list(const Json& j,
                                                 const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw ParseError(std::string("spec: missing array field '") + field + "'");
  }
  std::vector<std::pair<double, double>> out;
  for (const auto& entry : j[field]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number()) {
      throw ParseError(std::string("spec: field '") + field +
                       "' needs [number, number] pairs");
    }
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

std::vector<double> weight_list(const Json& j) {
  if (!j.contains("weights") || !j["weights"].is_array()) {
    throw ParseError("spec: combination needs a 'weights' array");
  }
  std::vector<double> weights;
  for (const auto& w : j["weights"]) {
    if (!w.is_number()) throw ParseError("spec: weights must be numbers");
    weights.push_back(w.get<double>());
  }
  return weights;
}

}  // namespace

Json measure_to_json(const RiskMeasureSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case MeasureKind::ExpectedLoss:
      j["kind"] = "EL";
      return j;
    case MeasureKind::ValueAtRisk:
      j["kind"] = "VaR";
      j["alpha"] = spec.alpha();
      return j;
    case MeasureKind::ExpectedShortfall:
      j["kind"] = "ES";
      j["alpha"] = spec.alpha();
      return j;
    case MeasureKind::MaxLoss:
      j["kind"] = "ML";
      return j;
    case MeasureKind::Spectral: {
      j["kind"] = "Spectral";
      Json steps = Json::array();
      for (const auto& [start, level] : spec.spectrum().steps()) {
        steps.push_back({to_double(start), to_double(level)});
      }
      j["breakpoints"] = std::move(steps);
      return j;
    }
    case MeasureKind::EsMixture: {
      j["kind"] = "ESMixture";
      Json atoms = Json::array();
      for (const auto& [alpha, mass] : spec.mixture().atoms()) {
        atoms.push_back({to_double(alpha), to_double(mass)});
      }
      j["atoms"] = std::move(atoms);
      return j;
    }
  }
  throw InternalError("measure_to_json: unhandled kind");
}

RiskMeasureSpec measure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("spec: measure needs a 'kind' string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "EL") return RiskMeasureSpec::expected_loss();
  if (kind == "VaR") return RiskMeasureSpec::value_at_risk(number_field(j, "alpha"));
  if (kind == "ES") {
    return RiskMeasureSpec::expected_shortfall(number_field(j, "alpha"));
  }
  if (kind == "ML") return RiskMeasureSpec::max_loss();
  if (kind == "Spectral") {
    return RiskMeasureSpec::spectral(
        Spectrum::from_doubles(pair_list(j, "breakpoints")));
  }
  if (kind == "ESMixture") {
    return RiskMeasureSpec::es_mixture(
        EsMixtureMeasure::from_doubles(pair_list(j, "atoms")));
  }
  throw ParseError("spec: unknown measure kind '" + kind + "'");
}

Json combination_to_json(const CombinationSpec& f) {
  Json j;
  switch (f.kind()) {
    case CombinationKind::WorstCase:
      j["kind"] = "WorstCase";
      return j;
    case CombinationKind::Mixture:
      j["kind"] = "Mixture";
      j["weights"] = f.weights().weights();
      return j;
    case CombinationKind::UtilityOfProfile:
      j["kind"] = "UtilityOfProfile";
      j["pi"] = measure_to_json(f.pi());
      j["weights"] = f.weights().weights();
      return j;
  }
  throw InternalError("combination_to_json: unhandled kind");
}

CombinationSpec combination_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ParseError("spec: combination needs a 'kind' string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "WorstCase") return CombinationSpec::worst_case();
  if (kind == "Mixture") {
    return CombinationSpec::mixture(IndexWeight(weight_list(j)));
  }
  if (kind == "UtilityOfProfile") {
    if (!j.contains("pi")) {
      throw ParseError("spec: UtilityOfProfile needs a 'pi' measure");
    }
    return CombinationSpec::utility_of_profile(measure_from_json(j["pi"]),
                                               IndexWeight(weight_list(j)));
  }
  throw ParseError("spec: unknown combination kind '" + kind + "'");
}

RiskMeasureSpec measure_from_shorthand(const std::string& token) {
  if (token == "EL") return RiskMeasureSpec::expected_loss();
  if (token == "ML") return RiskMeasureSpec::max_loss();
  const auto colon = token.find(':');
  if (colon != std::string::npos) {
    const std::string head = token.substr(0, colon);
    double level = 0.0;
    try {
      level = std::stod(token.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("measure shorthand: bad level in '" + token + "'");
    }
    if (head == "ES") return RiskMeasureSpec::expected_shortfall(level);
    if (head == "VaR") return RiskMeasureSpec::value_at_risk(level);
  }
  throw ParseError("measure shorthand: unknown token '" + token + "'");
}

}  // namespace riskcomb
