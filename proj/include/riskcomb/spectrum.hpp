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

#ifndef RISKCOMB_SPECTRUM_HPP
#define RISKCOMB_SPECTRUM_HPP

#include <utility>
#include <vector>

#include "riskcomb/rational.hpp"

namespace riskcomb {

/// Right-continuous step weight function phi on [0, 1]: pairs (start, level)
/// with start_0 = 0, starts strictly increasing inside [0, 1), adjacent
/// levels distinct after normalization, levels >= 0 and total integral 1.
/// Breakpoints and levels are exact rationals so that conversions to and
/// from ES-mixture measures round-trip without drift.
class Spectrum {
 public:
  using Step = std::pair<Rational, Rational>;  // (start, level)

  explicit Spectrum(std::vector<Step> steps);

  static Spectrum from_doubles(
      const std::vector<std::pair<double, double>>& steps);

  const std::vector<Step>& steps() const { return steps_; }

  Rational level_at(const Rational& u) const;
  double level_at(double u) const { return to_double(level_at(Rational(u))); }

  Rational integral() const;

  /// Integral of phi over [0, t].
  Rational integral_to(const Rational& t) const;

  bool nonincreasing() const;

  bool operator==(const Spectrum& other) const = default;

 private:
  std::vector<Step> steps_;
};

/// Discrete probability measure on (0, 1]: atoms (alpha, mass) sorted by
/// level, merged, positive masses summing to 1.
class EsMixtureMeasure {
 public:
  using Atom = std::pair<Rational, Rational>;  // (alpha, mass)

  explicit EsMixtureMeasure(std::vector<Atom> atoms);

  static EsMixtureMeasure from_doubles(
      const std::vector<std::pair<double, double>>& atoms);
  static EsMixtureMeasure dirac(const Rational& alpha);

  const std::vector<Atom>& atoms() const { return atoms_; }

  bool operator==(const EsMixtureMeasure& other) const = default;

 private:
  std::vector<Atom> atoms_;
};

/// phi(u) = sum over alpha_j > u of mass_j / alpha_j.
Spectrum phi_from_m(const EsMixtureMeasure& m);

/// Right inverse of phi_from_m: each interior drop of size D at breakpoint a
/// becomes mass a * D at a, and the terminal level becomes mass at 1.
/// Rejects spectra that are not nonincreasing.
EsMixtureMeasure m_from_phi(const Spectrum& phi);

/// Pointwise mixture sum(w_i * phi_i); weights must form a probability
/// vector over the spectra.
Spectrum mixture_spectrum(const std::vector<Spectrum>& spectra,
                          const std::vector<double>& weights);

/// sum(w_i * m_i), atom-exact on the merged support.
EsMixtureMeasure mixture_of_measures(const std::vector<EsMixtureMeasure>& ms,
                                     const std::vector<double>& weights);

}  // namespace riskcomb

#endif  // RISKCOMB_SPECTRUM_HPP
