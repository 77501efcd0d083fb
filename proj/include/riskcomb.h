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

/* C ABI of the riskcomb shared library: opaque handles plus status codes.
 * Workspaces hold the parsed scenario/position/spec tables; commands run
 * against a workspace and hand back a result with a structured-text (JSON)
 * document, a table rendering derived from it, and a pass flag.
 *
 * Thread model: handles are immutable after creation and may be shared
 * across threads; rc_last_error() is thread-local.
 */

#ifndef RISKCOMB_H
#define RISKCOMB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
  RC_OK = 0,
  RC_ERROR_INVALID_ARGUMENT = 1, /* malformed objects, dimension mismatch */
  RC_ERROR_DOMAIN = 2,           /* arguments outside their domain */
  RC_ERROR_UNSUPPORTED = 3,      /* outside the implemented theory */
  RC_ERROR_PARSE = 4,            /* unreadable workspace or spec input */
  RC_ERROR_INTERNAL = 5          /* library invariant violated */
} rc_status;

typedef struct rc_workspace rc_workspace;
typedef struct rc_result rc_result;

const char* rc_version(void);

/* Message for the calling thread's most recent failure. */
const char* rc_last_error(void);

/* Scenario CSV plus an optional specs JSON file (NULL for none). */
rc_status rc_workspace_open(const char* csv_path, const char* specs_path,
                            rc_workspace** out);

/* Same, from in-memory text. */
rc_status rc_workspace_parse(const char* csv_text, const char* specs_json,
                             rc_workspace** out);

void rc_workspace_close(rc_workspace* ws);

/* Single evaluation: measure token (workspace name, shorthand like "ES:0.5",
 * or inline JSON), position name, scenario name (NULL means "base"). */
rc_status rc_eval(const rc_workspace* ws, const char* measure,
                  const char* position, const char* scenario,
                  double* out_value);

/* Batch commands: eval, combine, dual-check, axioms, dominance, elicit,
 * kusuoka-check, report.  params_json may be NULL or an object like
 *   {"seed": 7, "tol": 1e-8, "args": {"measure": "ES:0.5", ...}}
 */
rc_status rc_run(const rc_workspace* ws, const char* command,
                 const char* params_json, rc_result** out);

/* UTF-8 structured document with stable key order; owned by the result. */
const char* rc_result_json(const rc_result* result);

/* Human table derived from the structured document. */
const char* rc_result_table(const rc_result* result);

/* 1 when every asserted check passed. */
int rc_result_passed(const rc_result* result);

/* 0 checks passed, 1 a check failed; usage/data problems surface as
 * rc_status errors instead. */
int rc_result_exit_code(const rc_result* result);

void rc_result_free(rc_result* result);

#ifdef __cplusplus
}
#endif

#endif /* RISKCOMB_H */
