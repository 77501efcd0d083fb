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

#include <doctest.h>

#include "riskcomb/errors.hpp"
#include "riskcomb/json_io.hpp"
#include "riskcomb/suite.hpp"

using namespace riskcomb;

namespace {

const char* kCanonicalCsv =
    "outcome_id, base_prob, stress, pos:X, pos:Y\n"
    "w1, 0.25, 0.4, -10, -5\n"
    "w2, 0.25, 0.3, -5, -5\n"
    "w3, 0.25, 0.2, 0, 0\n"
    "w4, 0.25, 0.1, 5, 0\n";

const char* kSpecsJson = R"({
  "measures": {
    "es50": {"kind": "ES", "alpha": 0.5},
    "el": {"kind": "EL"}
  },
  "combinations": {
    "wc": {"kind": "WorstCase"},
    "mix": {"kind": "Mixture", "weights": [0.5, 0.5]}
  }
})";

}  // namespace

TEST_CASE("canonical workspace parses") {
  const auto ws = parse_workspace(kCanonicalCsv, kSpecsJson);
  CHECK(ws.space->size() == 4);
  CHECK(ws.scenarios.size() == 2);  // base + stress
  CHECK(ws.positions.size() == 2);
  CHECK(ws.measures.size() == 2);
  CHECK(ws.combinations.size() == 2);
  CHECK(ws.warnings.empty());
  CHECK(resolve_position(ws, "X").values() ==
        std::vector<double>{-10.0, -5.0, 0.0, 5.0});
  CHECK(resolve_scenario(ws, "stress").probs() ==
        std::vector<double>{0.4, 0.3, 0.2, 0.1});
  CHECK(evaluate(resolve_measure(ws, "es50"), resolve_position(ws, "X"),
                 resolve_scenario(ws, "base")) == 7.5);
}

TEST_CASE("hard errors carry diagnostics") {
  SUBCASE("probabilities summing to 0.9") {
    const char* csv =
        "outcome_id, base_prob\n"
        "w1, 0.45\n"
        "w2, 0.45\n";
    CHECK_THROWS_AS(parse_workspace(csv, ""), ParseError);
  }
  SUBCASE("duplicate outcome id") {
    const char* csv =
        "outcome_id, base_prob\n"
        "w1, 0.5\n"
        "w1, 0.5\n";
    CHECK_THROWS_AS(parse_workspace(csv, ""), ParseError);
  }
  SUBCASE("ragged row") {
    const char* csv =
        "outcome_id, base_prob, pos:X\n"
        "w1, 0.5, 1\n"
        "w2, 0.5\n";
    CHECK_THROWS_WITH_AS(parse_workspace(csv, ""),
                         doctest::Contains("row 3"), ParseError);
  }
  SUBCASE("unparsable number names row and column") {
    const char* csv =
        "outcome_id, base_prob, pos:X\n"
        "w1, 0.5, 1\n"
        "w2, 0.5, oops\n";
    CHECK_THROWS_WITH_AS(parse_workspace(csv, ""),
                         doctest::Contains("pos:X"), ParseError);
  }
  SUBCASE("unknown spec kind") {
    CHECK_THROWS_AS(
        parse_workspace(kCanonicalCsv,
                        R"({"measures": {"bad": {"kind": "Entropic"}}})"),
        ParseError);
  }
  SUBCASE("reserved scenario name") {
    const char* csv =
        "outcome_id, base_prob, base\n"
        "w1, 1.0, 1.0\n";
    CHECK_THROWS_AS(parse_workspace(csv, ""), ParseError);
  }
}

TEST_CASE("tiny normalization slips are repaired with a warning") {
  const char* csv =
      "outcome_id, base_prob\n"
      "w1, 0.5000000001\n"
      "w2, 0.5\n";
  const auto ws = parse_workspace(csv, "");
  REQUIRE(ws.warnings.size() == 1);
  double total = 0.0;
  for (double p : ws.space->base_probs()) total += p;
  CHECK(total == 1.0);
}

TEST_CASE("measure spec round-trips through JSON") {
  for (const char* text :
       {R"({"kind":"EL"})", R"({"kind":"VaR","alpha":0.25})",
        R"({"kind":"ES","alpha":0.5})", R"({"kind":"ML"})",
        R"({"kind":"Spectral","breakpoints":[[0.0,2.0],[0.5,0.0]]})",
        R"({"kind":"ESMixture","atoms":[[0.5,0.5],[0.25,0.5]]})"}) {
    const auto spec = measure_from_json(Json::parse(text));
    const auto again = measure_from_json(measure_to_json(spec));
    CHECK(measure_to_json(spec) == measure_to_json(again));
  }
  for (const char* text :
       {R"({"kind":"WorstCase"})", R"({"kind":"Mixture","weights":[0.5,0.5]})",
        R"({"kind":"UtilityOfProfile","pi":{"kind":"ES","alpha":0.5},)"
        R"("weights":[0.25,0.75]})"}) {
    const auto f = combination_from_json(Json::parse(text));
    CHECK(combination_to_json(f) ==
          combination_to_json(combination_from_json(combination_to_json(f))));
  }
}

TEST_CASE("shorthand tokens") {
  const auto ws = parse_workspace(kCanonicalCsv, kSpecsJson);
  CHECK(resolve_measure(ws, "ES:0.25").kind() ==
        MeasureKind::ExpectedShortfall);
  CHECK(resolve_measure(ws, "VaR:0.1").alpha() == 0.1);
  CHECK(resolve_measure(ws, "EL").kind() == MeasureKind::ExpectedLoss);
  CHECK(resolve_measure(ws, R"({"kind":"ML"})").kind() ==
        MeasureKind::MaxLoss);
  CHECK_THROWS_AS(resolve_measure(ws, "Entropic:0.5"), ParseError);
  CHECK_THROWS_AS(resolve_position(ws, "Z"), ParseError);
}

TEST_CASE("run_command dispatch") {
  const auto ws = parse_workspace(kCanonicalCsv, kSpecsJson);

  SUBCASE("eval echoes the worked value") {
    RunConfig config;
    config.command = "eval";
    config.args = {{"measure", "ES:0.5"}, {"position", "X"}};
    const auto result = run_command(ws, config);
    CHECK(result.exit_code == 0);
    CHECK(result.document["value"] == 7.5);
  }
  SUBCASE("eval flags the saturated ES regime") {
    RunConfig config;
    config.command = "eval";
    config.args = {{"measure", "ES:0.1"}, {"position", "X"}};
    const auto result = run_command(ws, config);
    CHECK(result.document.contains("notes"));
  }
  SUBCASE("combine matches compose") {
    RunConfig config;
    config.command = "combine";
    config.args = {{"combination", "mix"},
                   {"measures", "ES:0.5,ES:0.25"},
                   {"position", "X"}};
    const auto result = run_command(ws, config);
    CHECK(result.document["value"] == 8.75);
  }
  SUBCASE("dual-check over all positions passes") {
    RunConfig config;
    config.command = "dual-check";
    config.args = {{"combination", "mix"},
                   {"measures", "ES:0.5,ES:0.25"},
                   {"positions", "all"}};
    const auto result = run_command(ws, config);
    CHECK(result.exit_code == 0);
    for (const auto& row : result.document["rows"]) {
      CHECK(row["gap"].get<double>() <= 1e-8);
    }
  }
  SUBCASE("dominance reports the candidate pair") {
    RunConfig config;
    config.command = "dominance";
    config.args = {{"x", "Y"}, {"y", "X"}, {"degree", "2"},
                   {"scenarios", "base"}, {"scope", "all"}};
    const auto result = run_command(ws, config);
    CHECK(result.document["dominates"] == true);
    config.args["degree"] = "1";
    CHECK(run_command(ws, config).document["dominates"] == false);
  }
  SUBCASE("elicit single scenario") {
    RunConfig config;
    config.command = "elicit";
    config.args = {{"score", "Pinball:0.25"}, {"position", "X"}};
    const auto result = run_command(ws, config);
    CHECK(result.document["value"] == 10.0);
  }
  SUBCASE("kusuoka-check on the mixture") {
    RunConfig config;
    config.command = "kusuoka-check";
    config.args = {{"combination", "mix"},
                   {"measure", "es50"},
                   {"scenarios", "base,stress"},
                   {"position", "X"}};
    const auto result = run_command(ws, config);
    CHECK(result.exit_code == 0);
    CHECK(result.document["lhs"] == 8.25);
  }
  SUBCASE("unknown command") {
    RunConfig config;
    config.command = "frobnicate";
    CHECK_THROWS_AS(run_command(ws, config), ParseError);
  }
  SUBCASE("missing argument") {
    RunConfig config;
    config.command = "eval";
    CHECK_THROWS_AS(run_command(ws, config), ParseError);
  }
}

TEST_CASE("identical config and seed give byte-identical documents") {
  const auto ws = parse_workspace(kCanonicalCsv, kSpecsJson);
  RunConfig config;
  config.command = "axioms";
  config.seed = 42;
  config.args = {{"combination", "mix"},
                 {"measures", "es50,es25"},
                 {"trials", "400"}};
  // es25 comes from shorthand: register it inline instead.
  config.args["measures"] = "ES:0.5,ES:0.25";
  const auto once = run_command(ws, config);
  const auto twice = run_command(ws, config);
  CHECK(once.document.dump() == twice.document.dump());
}

TEST_CASE("table rendering is derived from the document") {
  const auto ws = parse_workspace(kCanonicalCsv, kSpecsJson);
  RunConfig config;
  config.command = "dual-check";
  config.args = {{"positions", "X"}};
  const auto result = run_command(ws, config);
  const auto table = render_table(result.document);
  CHECK(table.find("gap") != std::string::npos);
  CHECK(table.find("rows") != std::string::npos);
}
