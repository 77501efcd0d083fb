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

#ifndef RISKCOMB_SUITE_HPP
#define RISKCOMB_SUITE_HPP

#include <cstdint>
#include <map>
#include <string>

#include "riskcomb/json_io.hpp"
#include "riskcomb/workspace.hpp"

namespace riskcomb {

/// One batch invocation: command plus named string arguments.  A seed is
/// required for the randomized commands so runs are reproducible.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::map<std::string, std::string> args;
};

struct RunResult {
  int exit_code = 0;  // 0 checks passed, 1 a check failed, 2 usage/data error
  bool passed = true;
  Json document;  // structured text output, stable key order
};

/// Dispatches eval | combine | dual-check | axioms | dominance | elicit |
/// kusuoka-check | report on a loaded workspace.  Usage and data problems
/// throw; check failures come back as exit_code 1 with a witness inside the
/// document.
RunResult run_command(const Workspace& ws, const RunConfig& config);

/// Human-readable rendering derived from the structured document (never
/// computed separately).
std::string render_table(const Json& document);

}  // namespace riskcomb

#endif  // RISKCOMB_SUITE_HPP
