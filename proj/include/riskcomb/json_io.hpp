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

#ifndef RISKCOMB_JSON_IO_HPP
#define RISKCOMB_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "riskcomb/combinators.hpp"
#include "riskcomb/measures.hpp"

namespace riskcomb {

using Json = nlohmann::ordered_json;

/// Measure specs as structured text, e.g. {"kind":"ES","alpha":0.5} or
/// {"kind":"Spectral","breakpoints":[[0.0,2.0],[0.5,0.0]]}.
Json measure_to_json(const RiskMeasureSpec& spec);
RiskMeasureSpec measure_from_json(const Json& j);

/// Combination specs, e.g. {"kind":"Mixture","weights":[0.5,0.5]}.
Json combination_to_json(const CombinationSpec& f);
CombinationSpec combination_from_json(const Json& j);

/// Compact command-line forms: "EL", "ML", "ES:0.5", "VaR:0.25".
RiskMeasureSpec measure_from_shorthand(const std::string& token);

}  // namespace riskcomb

#endif  // RISKCOMB_JSON_IO_HPP
