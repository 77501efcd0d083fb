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

#ifndef RISKCOMB_RATIONAL_HPP
#define RISKCOMB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace riskcomb {

/// Arbitrary-precision rational scalar for the exact ("oracle") arithmetic
/// mode.  Every IEEE double converts to a Rational without loss, so exact
/// pipelines can consume the same inputs as the fast double pipelines.
using Rational = boost::multiprecision::cpp_rational;

inline Rational to_rational(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace riskcomb

#endif  // RISKCOMB_RATIONAL_HPP
