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

#ifndef RISKCOMB_WORKSPACE_HPP
#define RISKCOMB_WORKSPACE_HPP

#include <map>
#include <string>
#include <vector>

#include "riskcomb/combinators.hpp"
#include "riskcomb/measures.hpp"

namespace riskcomb {

/// Everything a batch run references by name.  Scenario CSV columns:
/// `outcome_id, base_prob, <scenario>...` plus `pos:<name>` columns for
/// positions.  The base measure is always registered as scenario "base".
struct Workspace {
  SpacePtr space;
  std::map<std::string, ScenarioMeasure> scenarios;
  std::map<std::string, Position> positions;
  std::map<std::string, RiskMeasureSpec> measures;
  std::map<std::string, CombinationSpec> combinations;
  std::vector<std::string> warnings;
};

/// Parses CSV text plus an optional specs JSON document ({"measures": {...},
/// "combinations": {...}}).  Probability columns off by at most 1e-9 are
/// renormalized with a warning; larger deviations are hard errors.
Workspace parse_workspace(const std::string& csv_text,
                          const std::string& specs_json_text);

Workspace load_workspace(const std::string& csv_path,
                         const std::string& specs_path);

std::string read_text_file(const std::string& path);

/// Token resolution for command arguments: a workspace name, inline JSON, a
/// JSON file path, or (for measures) shorthand like "ES:0.5".
RiskMeasureSpec resolve_measure(const Workspace& ws, const std::string& token);
CombinationSpec resolve_combination(const Workspace& ws,
                                    const std::string& token);
const Position& resolve_position(const Workspace& ws, const std::string& name);
const ScenarioMeasure& resolve_scenario(const Workspace& ws,
                                        const std::string& name);

}  // namespace riskcomb

#endif  // RISKCOMB_WORKSPACE_HPP
