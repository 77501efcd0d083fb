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

#include "riskcomb/workspace.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "riskcomb/errors.hpp"
#include "riskcomb/json_io.hpp"

namespace riskcomb {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

double parse_number(const std::string& field, std::size_t row,
                    const std::string& column) {
  try {
    std::size_t used = 0;
    const double value = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return value;
  } catch (const std::exception&) {
    throw ParseError("workspace: row " + std::to_string(row) + ", column '" +
                     column + "': cannot parse number from '" + field + "'");
  }
}

/// Renormalizes a probability column when it is off by at most 1e-9.
void normalize_column(std::vector<double>& probs, const std::string& column,
                      std::vector<std::string>& warnings) {
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw ParseError("workspace: column '" + column +
                       "': negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) <= 1e-12) {
    return;  // inside the core tolerance, keep the entries verbatim
  }
  if (std::abs(total - 1.0) <= 1e-9) {
    warnings.push_back("column '" + column + "' renormalized (sum was off by " +
                       std::to_string(total - 1.0) + ")");
  } else {
    throw ParseError("workspace: column '" + column + "' sums to " +
                     std::to_string(total) + ", expected 1");
  }
  for (double& p : probs) p /= total;
  std::size_t last = probs.size();
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) last = k;
  }
  if (last == probs.size()) {
    throw ParseError("workspace: column '" + column + "' carries no mass");
  }
  double head = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (k != last) head += probs[k];
  }
  probs[last] = 1.0 - head;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Workspace parse_workspace(const std::string& csv_text,
                          const std::string& specs_json_text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(csv_text);
    std::string line;
    while (std::getline(in, line)) {
      line = trim(line);
      if (!line.empty()) lines.push_back(line);
    }
  }
  if (lines.empty()) throw ParseError("workspace: empty CSV");

  const auto header = split_csv_line(lines[0]);
  if (header.size() < 2 || header[0] != "outcome_id" ||
      header[1] != "base_prob") {
    throw ParseError(
        "workspace: header must start with 'outcome_id, base_prob'");
  }
  std::vector<std::string> scenario_names;
  std::vector<std::string> position_names;
  std::vector<bool> is_position;
  for (std::size_t c = 2; c < header.size(); ++c) {
    const std::string& name = header[c];
    if (name.rfind("pos:", 0) == 0) {
      position_names.push_back(name.substr(4));
      is_position.push_back(true);
      if (position_names.back().empty()) {
        throw ParseError("workspace: empty position name in header");
      }
    } else {
      if (name == "base") {
        throw ParseError("workspace: scenario name 'base' is reserved");
      }
      if (name.empty()) throw ParseError("workspace: empty scenario name");
      scenario_names.push_back(name);
      is_position.push_back(false);
    }
  }

  std::vector<std::string> outcome_ids;
  std::vector<double> base_probs;
  std::map<std::string, std::vector<double>> scenario_cols;
  std::map<std::string, std::vector<double>> position_cols;
  for (const auto& name : scenario_names) scenario_cols[name] = {};
  for (const auto& name : position_names) position_cols[name] = {};

  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_csv_line(lines[r]);
    if (fields.size() != header.size()) {
      throw ParseError("workspace: row " + std::to_string(r + 1) + " has " +
                       std::to_string(fields.size()) + " fields, expected " +
                       std::to_string(header.size()));
    }
    outcome_ids.push_back(fields[0]);
    base_probs.push_back(parse_number(fields[1], r + 1, "base_prob"));
    std::size_t sc = 0;
    std::size_t pc = 0;
    for (std::size_t c = 2; c < header.size(); ++c) {
      const double value = parse_number(fields[c], r + 1, header[c]);
      if (is_position[c - 2]) {
        position_cols[position_names[pc++]].push_back(value);
      } else {
        scenario_cols[scenario_names[sc++]].push_back(value);
      }
    }
  }

  Workspace ws;
  normalize_column(base_probs, "base_prob", ws.warnings);
  try {
    ws.space = std::make_shared<FiniteProbSpace>(outcome_ids, base_probs);
  } catch (const StructuralError& e) {
    throw ParseError(std::string("workspace: ") + e.what());
  }
  ws.scenarios.emplace("base", ScenarioMeasure::base(ws.space));
  for (auto& [name, probs] : scenario_cols) {
    normalize_column(probs, name, ws.warnings);
    try {
      ws.scenarios.emplace(name, ScenarioMeasure(ws.space, std::move(probs)));
    } catch (const StructuralError& e) {
      throw ParseError("workspace: scenario '" + name + "': " + e.what());
    }
  }
  for (auto& [name, values] : position_cols) {
    try {
      ws.positions.emplace(name, Position(ws.space, std::move(values)));
    } catch (const StructuralError& e) {
      throw ParseError("workspace: position '" + name + "': " + e.what());
    }
  }

  if (!trim(specs_json_text).empty()) {
    Json specs;
    try {
      specs = Json::parse(specs_json_text);
    } catch (const std::exception& e) {
      throw ParseError(std::string("specs: invalid JSON: ") + e.what());
    }
    if (specs.contains("measures")) {
      for (const auto& [name, body] : specs["measures"].items()) {
        ws.measures.emplace(name, measure_from_json(body));
      }
    }
    if (specs.contains("combinations")) {
      for (const auto& [name, body] : specs["combinations"].items()) {
        ws.combinations.emplace(name, combination_from_json(body));
      }
    }
  }
  return ws;
}

Workspace load_workspace(const std::string& csv_path,
                         const std::string& specs_path) {
  const std::string csv = read_text_file(csv_path);
  const std::string specs =
      specs_path.empty() ? std::string() : read_text_file(specs_path);
  return parse_workspace(csv, specs);
}

RiskMeasureSpec resolve_measure(const Workspace& ws, const std::string& token) {
  if (auto it = ws.measures.find(token); it != ws.measures.end()) {
    return it->second;
  }
  if (!token.empty() && token.front() == '{') {
    try {
      return measure_from_json(Json::parse(token));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("measure: invalid JSON: ") + e.what());
    }
  }
  if (std::filesystem::exists(token)) {
    try {
      return measure_from_json(Json::parse(read_text_file(token)));
    } catch (const Json::exception& e) {
      throw ParseError("measure file '" + token + "': " + e.what());
    }
  }
  return measure_from_shorthand(token);
}

CombinationSpec resolve_combination(const Workspace& ws,
                                    const std::string& token) {
  if (auto it = ws.combinations.find(token); it != ws.combinations.end()) {
    return it->second;
  }
  if (token == "WorstCase") return CombinationSpec::worst_case();
  if (!token.empty() && token.front() == '{') {
    try {
      return combination_from_json(Json::parse(token));
    } catch (const Json::exception& e) {
      throw ParseError(std::string("combination: invalid JSON: ") + e.what());
    }
  }
  if (std::filesystem::exists(token)) {
    try {
      return combination_from_json(Json::parse(read_text_file(token)));
    } catch (const Json::exception& e) {
      throw ParseError("combination file '" + token + "': " + e.what());
    }
  }
  throw ParseError("combination: unknown token '" + token + "'");
}

const Position& resolve_position(const Workspace& ws, const std::string& name) {
  const auto it = ws.positions.find(name);
  if (it == ws.positions.end()) {
    throw ParseError("position '" + name + "' not in workspace");
  }
  return it->second;
}

const ScenarioMeasure& resolve_scenario(const Workspace& ws,
                                        const std::string& name) {
  const auto it = ws.scenarios.find(name);
  if (it == ws.scenarios.end()) {
    throw ParseError("scenario '" + name + "' not in workspace");
  }
  return it->second;
}

}  // namespace riskcomb
