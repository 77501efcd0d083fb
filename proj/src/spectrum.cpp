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

#include "riskcomb/spectrum.hpp"

#include <algorithm>
#include <map>

#include "riskcomb/errors.hpp"

namespace riskcomb {

namespace {

// Inputs arrive as parsed doubles, so the unit-integral checks carry a small
// tolerance; everything downstream of construction is exact.
const Rational& unit_tolerance() {
  static const Rational tol(1, 10000000000LL);  // 1e-10
  return tol;
}

bool near_one(const Rational& v) {
  const Rational diff = v - 1;
  return diff <= unit_tolerance() && diff >= -unit_tolerance();
}

}  // namespace

Spectrum::Spectrum(std::vector<Step> steps) {
  std::stable_sort(steps.begin(), steps.end(),
                   [](const Step& a, const Step& b) { return a.first < b.first; });
  for (const auto& [start, level] : steps) {
    if (start < 0 || start > 1) {
      throw StructuralError("Spectrum: breakpoints must lie in [0, 1]");
    }
    if (level < 0) throw StructuralError("Spectrum: levels must be >= 0");
  }
  if (steps.empty() || steps.front().first != 0) {
    throw StructuralError("Spectrum: first step must start at 0");
  }
  for (const auto& [start, level] : steps) {
    if (start >= 1) continue;  // zero-length trailing piece, ignore
    if (!steps_.empty() && steps_.back().first == start) {
      throw StructuralError("Spectrum: duplicate breakpoint");
    }
    if (!steps_.empty() && steps_.back().second == level) continue;
    steps_.emplace_back(start, level);
  }
  if (!near_one(integral())) {
    throw StructuralError("Spectrum: integral over [0, 1] must be 1");
  }
}

Spectrum Spectrum::from_doubles(
    const std::vector<std::pair<double, double>>& steps) {
  std::vector<Step> exact;
  exact.reserve(steps.size());
  for (const auto& [start, level] : steps) {
    exact.emplace_back(Rational(start), Rational(level));
  }
  return Spectrum(std::move(exact));
}

Rational Spectrum::level_at(const Rational& u) const {
  if (u < 0 || u > 1) throw DomainError("Spectrum: level_at outside [0, 1]");
  Rational level = 0;
  for (const auto& [start, lev] : steps_) {
    if (start > u) break;
    level = lev;
  }
  return level;
}

Rational Spectrum::integral() const {
  Rational total = 0;
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    const Rational end = (t + 1 < steps_.size()) ? steps_[t + 1].first : Rational(1);
    total += steps_[t].second * (end - steps_[t].first);
  }
  return total;
}

Rational Spectrum::integral_to(const Rational& t) const {
  Rational total = 0;
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const Rational& start = steps_[k].first;
    if (start >= t) break;
    Rational end = (k + 1 < steps_.size()) ? steps_[k + 1].first : Rational(1);
    if (end > t) end = t;
    total += steps_[k].second * (end - start);
  }
  return total;
}

bool Spectrum::nonincreasing() const {
  for (std::size_t t = 1; t < steps_.size(); ++t) {
    if (steps_[t].second > steps_[t - 1].second) return false;
  }
  return true;
}

EsMixtureMeasure::EsMixtureMeasure(std::vector<Atom> atoms) {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& a, const Atom& b) { return a.first < b.first; });
  Rational total = 0;
  for (const auto& [alpha, mass] : atoms) {
    if (alpha <= 0 || alpha > 1) {
      throw StructuralError("EsMixtureMeasure: support must lie in (0, 1]");
    }
    if (mass < 0) throw StructuralError("EsMixtureMeasure: negative mass");
    if (mass == 0) continue;
    total += mass;
    if (!atoms_.empty() && atoms_.back().first == alpha) {
      atoms_.back().second += mass;
    } else {
      atoms_.emplace_back(alpha, mass);
    }
  }
  if (atoms_.empty()) {
    throw StructuralError("EsMixtureMeasure: needs positive total mass");
  }
  if (!near_one(total)) {
    throw StructuralError("EsMixtureMeasure: masses must sum to 1");
  }
}

EsMixtureMeasure EsMixtureMeasure::from_doubles(
    const std::vector<std::pair<double, double>>& atoms) {
  std::vector<Atom> exact;
  exact.reserve(atoms.size());
  for (const auto& [alpha, mass] : atoms) {
    exact.emplace_back(Rational(alpha), Rational(mass));
  }
  return EsMixtureMeasure(std::move(exact));
}

EsMixtureMeasure EsMixtureMeasure::dirac(const Rational& alpha) {
  return EsMixtureMeasure({{alpha, Rational(1)}});
}

Spectrum phi_from_m(const EsMixtureMeasure& m) {
  // Walk the atoms from the top: the level below atom alpha_j gains
  // mass_j / alpha_j.
  Rational level = 0;
  std::vector<Spectrum::Step> steps;
  const auto& atoms = m.atoms();
  for (std::size_t j = atoms.size(); j-- > 0;) {
    const auto& [alpha, mass] = atoms[j];
    if (alpha < 1) steps.emplace_back(alpha, level);
    level += mass / alpha;
  }
  steps.emplace_back(Rational(0), level);
  std::reverse(steps.begin(), steps.end());
  return Spectrum(std::move(steps));
}

EsMixtureMeasure m_from_phi(const Spectrum& phi) {
  if (!phi.nonincreasing()) {
    throw DomainError(
        "m_from_phi: increasing spectra have no ES-mixture form");
  }
  std::vector<EsMixtureMeasure::Atom> atoms;
  const auto& steps = phi.steps();
  for (std::size_t t = 1; t < steps.size(); ++t) {
    const Rational drop = steps[t - 1].second - steps[t].second;
    atoms.emplace_back(steps[t].first, steps[t].first * drop);
  }
  const Rational terminal = steps.back().second;
  if (terminal > 0) atoms.emplace_back(Rational(1), terminal);
  return EsMixtureMeasure(std::move(atoms));
}

Spectrum mixture_spectrum(const std::vector<Spectrum>& spectra,
                          const std::vector<double>& weights) {
  if (spectra.empty() || spectra.size() != weights.size()) {
    throw StructuralError("mixture_spectrum: one weight per spectrum");
  }
  std::vector<Rational> starts;
  for (const auto& phi : spectra) {
    for (const auto& [start, level] : phi.steps()) starts.push_back(start);
  }
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<Spectrum::Step> steps;
  steps.reserve(starts.size());
  for (const auto& start : starts) {
    Rational level = 0;
    for (std::size_t i = 0; i < spectra.size(); ++i) {
      level += Rational(weights[i]) * spectra[i].level_at(start);
    }
    steps.emplace_back(start, level);
  }
  return Spectrum(std::move(steps));
}

EsMixtureMeasure mixture_of_measures(const std::vector<EsMixtureMeasure>& ms,
                                     const std::vector<double>& weights) {
  if (ms.empty() || ms.size() != weights.size()) {
    throw StructuralError("mixture_of_measures: one weight per measure");
  }
  std::map<Rational, Rational> merged;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (const auto& [alpha, mass] : ms[i].atoms()) {
      merged[alpha] += Rational(weights[i]) * mass;
    }
  }
  std::vector<EsMixtureMeasure::Atom> atoms(merged.begin(), merged.end());
  return EsMixtureMeasure(std::move(atoms));
}

}  // namespace riskcomb
