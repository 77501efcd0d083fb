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

#include <string>

#include "riskcomb/errors.hpp"
#include "riskcomb/suite.hpp"
#include "riskcomb/workspace.hpp"

struct rc_workspace {
  riskcomb::Workspace ws;
};

struct rc_result {
  riskcomb::RunResult run;
  std::string json_text;
  std::string table_text;
};

namespace {

thread_local std::string g_last_error;

rc_status fail(rc_status status, const char* what) {
  g_last_error = what ? what : "unknown error";
  return status;
}

template <typename Fn>
rc_status guarded(Fn&& fn) {
  try {
    fn();
    return RC_OK;
  } catch (const riskcomb::ParseError& e) {
    return fail(RC_ERROR_PARSE, e.what());
  } catch (const riskcomb::DomainError& e) {
    return fail(RC_ERROR_DOMAIN, e.what());
  } catch (const riskcomb::UnsupportedError& e) {
    return fail(RC_ERROR_UNSUPPORTED, e.what());
  } catch (const riskcomb::StructuralError& e) {
    return fail(RC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const riskcomb::InternalError& e) {
    return fail(RC_ERROR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(RC_ERROR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* rc_version(void) { return "0.1.0"; }

const char* rc_last_error(void) { return g_last_error.c_str(); }

rc_status rc_workspace_open(const char* csv_path, const char* specs_path,
                            rc_workspace** out) {
  if (!csv_path || !out) {
    return fail(RC_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = new rc_workspace{riskcomb::load_workspace(
        csv_path, specs_path ? specs_path : "")};
    *out = handle;
  });
}

rc_status rc_workspace_parse(const char* csv_text, const char* specs_json,
                             rc_workspace** out) {
  if (!csv_text || !out) {
    return fail(RC_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    auto handle = new rc_workspace{riskcomb::parse_workspace(
        csv_text, specs_json ? specs_json : "")};
    *out = handle;
  });
}

void rc_workspace_close(rc_workspace* ws) { delete ws; }

rc_status rc_eval(const rc_workspace* ws, const char* measure,
                  const char* position, const char* scenario,
                  double* out_value) {
  if (!ws || !measure || !position || !out_value) {
    return fail(RC_ERROR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto spec = riskcomb::resolve_measure(ws->ws, measure);
    const auto& x = riskcomb::resolve_position(ws->ws, position);
    const auto& q =
        riskcomb::resolve_scenario(ws->ws, scenario ? scenario : "base");
    *out_value = riskcomb::evaluate(spec, x, q);
  });
}

rc_status rc_run(const rc_workspace* ws, const char* command,
                 const char* params_json, rc_result** out) {
  if (!ws || !command || !out) {
    return fail(RC_ERROR_INVALID_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    riskcomb::RunConfig config;
    config.command = command;
    if (params_json && *params_json) {
      riskcomb::Json params;
      try {
        params = riskcomb::Json::parse(params_json);
      } catch (const std::exception& e) {
        throw riskcomb::ParseError(std::string("params: invalid JSON: ") +
                                   e.what());
      }
      if (params.contains("seed")) {
        config.seed = params["seed"].get<std::uint64_t>();
      }
      if (params.contains("tol")) config.tol = params["tol"].get<double>();
      if (params.contains("args")) {
        for (const auto& [key, value] : params["args"].items()) {
          config.args[key] = value.is_string() ? value.get<std::string>()
                                               : value.dump();
        }
      }
    }
    auto result = new rc_result{riskcomb::run_command(ws->ws, config), "", ""};
    result->json_text = result->run.document.dump(2);
    result->table_text = riskcomb::render_table(result->run.document);
    *out = result;
  });
}

const char* rc_result_json(const rc_result* result) {
  return result ? result->json_text.c_str() : "";
}

const char* rc_result_table(const rc_result* result) {
  return result ? result->table_text.c_str() : "";
}

int rc_result_passed(const rc_result* result) {
  return result && result->run.passed ? 1 : 0;
}

int rc_result_exit_code(const rc_result* result) {
  return result ? result->run.exit_code : 2;
}

void rc_result_free(rc_result* result) { delete result; }

}  // extern "C"
