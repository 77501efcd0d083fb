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

#include "riskcomb.h"

#include <doctest.h>

#include <cstring>
#include <string>

namespace {

const char* kCsv =
    "outcome_id, base_prob, stress, pos:X\n"
    "w1, 0.25, 0.4, -10\n"
    "w2, 0.25, 0.3, -5\n"
    "w3, 0.25, 0.2, 0\n"
    "w4, 0.25, 0.1, 5\n";

struct Workspace {
  rc_workspace* ws = nullptr;
  ~Workspace() { rc_workspace_close(ws); }
};

}  // namespace

TEST_CASE("open, evaluate, close") {
  Workspace h;
  REQUIRE(rc_workspace_parse(kCsv, nullptr, &h.ws) == RC_OK);
  double value = 0.0;
  REQUIRE(rc_eval(h.ws, "ES:0.5", "X", nullptr, &value) == RC_OK);
  CHECK(value == 7.5);
  REQUIRE(rc_eval(h.ws, "EL", "X", "stress", &value) == RC_OK);
  CHECK(value == 5.0);
}

TEST_CASE("status codes carry the error taxonomy") {
  Workspace h;
  CHECK(rc_workspace_parse("outcome_id, base_prob\nw1, 0.9\n", nullptr,
                           &h.ws) == RC_ERROR_PARSE);
  CHECK(std::string(rc_last_error()).find("sums") != std::string::npos);

  REQUIRE(rc_workspace_parse(kCsv, nullptr, &h.ws) == RC_OK);
  double value = 0.0;
  CHECK(rc_eval(h.ws, "ES:0.5", "missing", nullptr, &value) == RC_ERROR_PARSE);
  CHECK(rc_eval(h.ws, "ES:2.0", "X", nullptr, &value) ==
        RC_ERROR_INVALID_ARGUMENT);
  CHECK(rc_eval(nullptr, "EL", "X", nullptr, &value) ==
        RC_ERROR_INVALID_ARGUMENT);

  rc_result* result = nullptr;
  CHECK(rc_run(h.ws, "frobnicate", nullptr, &result) == RC_ERROR_PARSE);
  CHECK(result == nullptr);
}

TEST_CASE("rc_run returns structured documents and exit codes") {
  Workspace h;
  REQUIRE(rc_workspace_parse(kCsv, nullptr, &h.ws) == RC_OK);

  rc_result* result = nullptr;
  REQUIRE(rc_run(h.ws, "eval",
                 R"({"args": {"measure": "ES:0.5", "position": "X"}})",
                 &result) == RC_OK);
  CHECK(rc_result_passed(result) == 1);
  CHECK(rc_result_exit_code(result) == 0);
  const std::string json = rc_result_json(result);
  CHECK(json.find("\"value\": 7.5") != std::string::npos);
  const std::string table = rc_result_table(result);
  CHECK(table.find("7.5") != std::string::npos);
  rc_result_free(result);
}

TEST_CASE("determinism across repeated runs") {
  Workspace h;
  REQUIRE(rc_workspace_parse(kCsv, nullptr, &h.ws) == RC_OK);
  const char* params =
      R"({"seed": 9, "args": {"combination": "{\"kind\":\"WorstCase\"}",
          "measures": "EL,ES:0.5", "trials": "300"}})";
  rc_result* a = nullptr;
  rc_result* b = nullptr;
  REQUIRE(rc_run(h.ws, "axioms", params, &a) == RC_OK);
  REQUIRE(rc_run(h.ws, "axioms", params, &b) == RC_OK);
  CHECK(std::strcmp(rc_result_json(a), rc_result_json(b)) == 0);
  rc_result_free(a);
  rc_result_free(b);
}

TEST_CASE("version string present") {
  CHECK(std::string(rc_version()).find('.') != std::string::npos);
}
