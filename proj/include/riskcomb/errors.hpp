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

#ifndef RISKCOMB_ERRORS_HPP
#define RISKCOMB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riskcomb {

// Error taxonomy, mirrored one-to-one by the C API status codes:
//   StructuralError  - malformed objects, dimension mismatches
//   DomainError      - arguments outside their mathematical domain
//   UnsupportedError - requests outside the implemented theory (e.g. a
//                      penalty for a non-coherent measure)
//   ParseError       - unreadable workspace/spec inputs
//   InternalError    - invariants the library itself must uphold

struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace riskcomb

#endif  // RISKCOMB_ERRORS_HPP
