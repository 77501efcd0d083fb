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

// Batch front-end over the riskcomb C API.  Every subcommand forwards its
// flags as a params document to rc_run and prints the structured output (or
// the table derived from it).  Exit codes: 0 checks passed, 1 a check
// failed, 2 usage or data error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "riskcomb.h"

namespace {

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 8);
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string build_params(std::uint64_t seed, double tol,
                         const std::map<std::string, std::string>& args) {
  std::ostringstream out;
  out << "{\"seed\": " << seed << ", \"tol\": " << tol << ", \"args\": {";
  bool first = true;
  for (const auto& [key, value] : args) {
    if (!first) out << ", ";
    out << "\"" << json_escape(key) << "\": \"" << json_escape(value) << "\"";
    first = false;
  }
  out << "}}";
  return out.str();
}

struct WorkspaceHandle {
  rc_workspace* ws = nullptr;
  ~WorkspaceHandle() { rc_workspace_close(ws); }
};

struct ResultHandle {
  rc_result* result = nullptr;
  ~ResultHandle() { rc_result_free(result); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riskcomb: risk measures on finite probability spaces, their "
               "combinations, and dual-representation checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string workspace_path;
  std::string specs_path;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string out_path;
  std::string format = "structured";
  app.add_option("--workspace", workspace_path, "Scenario CSV")->required();
  app.add_option("--specs", specs_path, "Specs JSON file");
  app.add_option("--seed", seed, "Seed for randomized checks");
  app.add_option("--tol", tol, "Gap tolerance for dual checks");
  app.add_option("--out", out_path, "Write output here instead of stdout");
  app.add_option("--format", format, "structured | table")
      ->check(CLI::IsMember({"structured", "table"}));

  std::map<std::string, std::string> args;
  auto opt = [&args](CLI::App* cmd, const std::string& name,
                     const std::string& help, bool required = false) {
    std::string flags = "--" + name;
    if (name == "combination") flags += ",--combine";
    auto* o = cmd->add_option_function<std::string>(
        flags, [&args, name](const std::string& v) { args[name] = v; }, help);
    if (required) o->required();
    return o;
  };

  auto* eval = app.add_subcommand("eval", "Evaluate one risk measure");
  opt(eval, "measure", "Measure name, shorthand (ES:0.5) or JSON", true);
  opt(eval, "position", "Position name", true);
  opt(eval, "scenario", "Scenario name (default base)");

  auto* combine = app.add_subcommand("combine", "Combine a risk profile");
  opt(combine, "combination", "Combination name or JSON", true);
  opt(combine, "measures", "Comma-separated measure tokens", true);
  opt(combine, "scenarios", "Comma-separated scenario names");
  opt(combine, "position", "Position name", true);

  auto* dual = app.add_subcommand(
      "dual-check", "Evaluate vs dual-representation maximum");
  opt(dual, "combination", "Combination token (omit for per-measure checks)");
  opt(dual, "measures", "Comma-separated measure tokens");
  opt(dual, "scenarios", "Comma-separated scenario names");
  opt(dual, "positions", "Position names or 'all'");

  auto* axioms = app.add_subcommand("axioms", "Falsification search");
  opt(axioms, "combination", "Combination token", true);
  opt(axioms, "measures", "Comma-separated measure tokens", true);
  opt(axioms, "scenarios", "Comma-separated scenario names");
  opt(axioms, "trials", "Trials per axiom (default 10000)");

  auto* dominance = app.add_subcommand("dominance", "Stochastic dominance");
  opt(dominance, "x", "Dominant position", true);
  opt(dominance, "y", "Dominated position", true);
  opt(dominance, "degree", "1 or 2");
  opt(dominance, "scope", "single | all");
  opt(dominance, "scenarios", "Comma-separated scenario names");

  auto* elicit = app.add_subcommand("elicit", "Scoring-function elicitation");
  opt(elicit, "score", "SquaredError or Pinball:<level>", true);
  opt(elicit, "position", "Position name", true);
  opt(elicit, "scenarios", "Comma-separated scenario names");
  opt(elicit, "resolution", "Grid resolution override");

  auto* kusuoka = app.add_subcommand(
      "kusuoka-check", "ES-mixture representation checks");
  opt(kusuoka, "combination", "Combination token", true);
  opt(kusuoka, "measure", "Measure token", true);
  opt(kusuoka, "scenarios", "Comma-separated scenario names");
  opt(kusuoka, "position", "Position name", true);
  opt(kusuoka, "grid", "Comma-separated ES levels for the sweep");

  auto* report = app.add_subcommand(
      "report", "Run the full check battery on the workspace");
  opt(report, "trials", "Trials per randomized check (default 2000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors
  }

  WorkspaceHandle ws;
  rc_status status = rc_workspace_open(
      workspace_path.c_str(), specs_path.empty() ? nullptr : specs_path.c_str(),
      &ws.ws);
  if (status != RC_OK) {
    std::cerr << "error: " << rc_last_error() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const std::string params = build_params(seed, tol, args);

  ResultHandle result;
  status = rc_run(ws.ws, command.c_str(), params.c_str(), &result.result);
  if (status != RC_OK) {
    std::cerr << "error: " << rc_last_error() << "\n";
    return 2;
  }

  const char* text = format == "table" ? rc_result_table(result.result)
                                       : rc_result_json(result.result);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return 2;
    }
    out << text << "\n";
  }
  return rc_result_exit_code(result.result);
}
