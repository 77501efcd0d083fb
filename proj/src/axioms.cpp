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

#include "riskcomb/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"

namespace riskcomb {

std::string axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Monotonicity:
      return "Monotonicity";
    case Axiom::TranslationInvariance:
      return "TranslationInvariance";
    case Axiom::PositiveHomogeneity:
      return "PositiveHomogeneity";
    case Axiom::Convexity:
      return "Convexity";
    case Axiom::Additivity:
      return "Additivity";
    case Axiom::Boundedness:
      return "Boundedness";
    case Axiom::LawInvariance:
      return "LawInvariance";
    case Axiom::ComonotonicAdditivity:
      return "ComonotonicAdditivity";
    case Axiom::FatouLipschitz:
      return "Fatou(LipschitzBound)";
  }
  return "?";
}

namespace {

double tolerance_for(double scale) { return 1e-9 * (1.0 + std::abs(scale)); }

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> add(const std::vector<double>& a,
                        const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

std::vector<double> blend(double lambda, const std::vector<double>& a,
                          const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k] = lambda * a[k] + (1.0 - lambda) * b[k];
  }
  return out;
}

std::vector<double> scale(double lambda, const std::vector<double>& a) {
  std::vector<double> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = lambda * a[k];
  return out;
}

/// Curated adversarial vectors for a given dimension: sparse spikes and
/// constants catch violations that diffuse random draws miss.
std::vector<std::vector<double>> curated_vectors(std::size_t n) {
  std::vector<std::vector<double>> out;
  out.push_back(std::vector<double>(n, 0.0));
  out.push_back(std::vector<double>(n, 1.0));
  out.push_back(std::vector<double>(n, -1.0));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> spike(n, 0.0);
    spike[k] = -1.0;
    out.push_back(spike);
    spike[k] = 1.0;
    out.push_back(spike);
  }
  std::vector<double> ramp(n);
  for (std::size_t k = 0; k < n; ++k) ramp[k] = static_cast<double>(k) - 1.0;
  out.push_back(ramp);
  return out;
}

struct Trial {
  std::vector<double> first;
  std::vector<double> second;
  double lambda = 0.5;
  double shift = 1.0;
};

/// Curated pairs first, random pairs after; `comonotone` makes both vectors
/// sorted against a common outcome order.
std::vector<Trial> make_trials(std::size_t dim, std::uint64_t seed,
                               std::size_t count, bool comonotone) {
  std::vector<Trial> trials;
  trials.reserve(count);
  const auto curated = curated_vectors(dim);
  for (std::size_t a = 0; a < curated.size() && trials.size() < count; ++a) {
    for (std::size_t b = 0; b < curated.size() && trials.size() < count; ++b) {
      trials.push_back({curated[a], curated[b], 0.5, 1.0});
    }
  }
  Rng rng(seed);
  while (trials.size() < count) {
    Trial t;
    t.first = rng.vector(dim, -10.0, 10.0);
    t.second = rng.vector(dim, -10.0, 10.0);
    t.lambda = rng.standard();
    t.shift = rng.uniform(-5.0, 5.0);
    if (comonotone) {
      std::sort(t.first.begin(), t.first.end());
      std::sort(t.second.begin(), t.second.end());
      const auto perm = Rng(seed ^ trials.size()).permutation(dim);
      std::vector<double> a(dim), b(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        a[k] = t.first[perm[k]];
        b[k] = t.second[perm[k]];
      }
      t.first = std::move(a);
      t.second = std::move(b);
    }
    trials.push_back(std::move(t));
  }
  return trials;
}

CheckReport run_search(
    std::string subject, Axiom axiom, std::size_t count,
    const std::function<std::optional<CheckWitness>(const Trial&)>& attack,
    const std::vector<Trial>& trials) {
  CheckReport report;
  report.subject = std::move(subject);
  report.axiom = axiom_name(axiom);
  report.trials = count;
  for (const auto& trial : trials) {
    if (auto witness = attack(trial)) {
      report.passed = false;
      report.witness = std::move(witness);
      return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace

CheckReport check_f_axiom(const CombinationSpec& f, Axiom axiom,
                          std::uint64_t seed, std::size_t trials) {
  const std::size_t dim = f.dimension().value_or(3);
  auto value = [&](const std::vector<double>& entries) {
    return combine(f, RiskProfile{entries});
  };

  auto attack = [&](const Trial& t) -> std::optional<CheckWitness> {
    const double tol = tolerance_for(
        std::max(max_abs(t.first), max_abs(t.second)) + std::abs(t.shift));
    switch (axiom) {
      case Axiom::Monotonicity: {
        // Dominated profile: S = min(first, second) <= R = first.
        std::vector<double> lower(t.first.size());
        for (std::size_t k = 0; k < lower.size(); ++k) {
          lower[k] = std::min(t.first[k], t.second[k]);
        }
        const double lhs = value(t.first);
        const double rhs = value(lower);
        if (lhs + tol < rhs) return CheckWitness{t.first, lower, 0, lhs, rhs};
        return std::nullopt;
      }
      case Axiom::TranslationInvariance: {
        std::vector<double> shifted = t.first;
        for (auto& v : shifted) v += t.shift;
        const double lhs = value(shifted);
        const double rhs = value(t.first) + t.shift;
        if (std::abs(lhs - rhs) > tol) {
          return CheckWitness{t.first, {}, t.shift, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::PositiveHomogeneity: {
        const double lambda = 3.0 * t.lambda;
        const double lhs = value(scale(lambda, t.first));
        const double rhs = lambda * value(t.first);
        if (std::abs(lhs - rhs) > tol * (1.0 + lambda)) {
          return CheckWitness{t.first, {}, lambda, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::Convexity: {
        const double lhs = value(blend(t.lambda, t.first, t.second));
        const double rhs =
            t.lambda * value(t.first) + (1.0 - t.lambda) * value(t.second);
        if (lhs > rhs + tol) {
          return CheckWitness{t.first, t.second, t.lambda, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::Additivity: {
        const double lhs = value(add(t.first, t.second));
        const double rhs = value(t.first) + value(t.second);
        if (std::abs(lhs - rhs) > tol) {
          return CheckWitness{t.first, t.second, 0, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::Boundedness: {
        // One-sided domination by the worst case, which is what the
        // acceptance-set inclusion argument needs.
        const double lhs = value(t.first);
        const double rhs =
            *std::max_element(t.first.begin(), t.first.end());
        if (lhs > rhs + tol) return CheckWitness{t.first, {}, 0, lhs, rhs};
        return std::nullopt;
      }
      default:
        throw DomainError("check_f_axiom: axiom applies to risk measures");
    }
  };

  return run_search("f=" + f.label(), axiom, trials, attack,
                    make_trials(dim, seed, trials, false));
}

namespace {

/// Outcomes are interchangeable for law-invariance purposes only when every
/// scenario in the bundle gives them identical mass.
std::vector<std::size_t> law_invariance_shuffle(const RiskBundle& rho,
                                                const std::vector<double>& x,
                                                Rng& rng) {
  const std::size_t n = x.size();
  std::map<std::vector<double>, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> key;
    for (const auto& q : rho.scenarios) key.push_back(q[k]);
    groups[key].push_back(k);
  }
  std::vector<std::size_t> perm(n);
  for (auto& [key, members] : groups) {
    std::vector<std::size_t> shuffled = members;
    for (std::size_t k = shuffled.size(); k > 1; --k) {
      std::swap(shuffled[k - 1], shuffled[rng.index(k)]);
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      perm[members[k]] = shuffled[k];
    }
  }
  return perm;
}

}  // namespace

CheckReport check_rho_axiom(const RiskBundle& rho, Axiom axiom,
                            std::uint64_t seed, std::size_t trials) {
  const SpacePtr& space = rho.space();
  const std::size_t dim = space->size();
  auto value = [&](const std::vector<double>& values) {
    return rho(Position(space, values));
  };
  Rng perm_rng(seed ^ 0x9e3779b97f4a7c15ULL);

  auto attack = [&](const Trial& t) -> std::optional<CheckWitness> {
    const double tol = tolerance_for(
        std::max(max_abs(t.first), max_abs(t.second)) + std::abs(t.shift));
    switch (axiom) {
      case Axiom::Monotonicity: {
        // X <= Y must give rho(X) >= rho(Y).
        std::vector<double> lower(t.first.size());
        for (std::size_t k = 0; k < lower.size(); ++k) {
          lower[k] = std::min(t.first[k], t.second[k]);
        }
        const double lhs = value(lower);
        const double rhs = value(t.first);
        if (lhs + tol < rhs) return CheckWitness{lower, t.first, 0, lhs, rhs};
        return std::nullopt;
      }
      case Axiom::TranslationInvariance: {
        std::vector<double> shifted = t.first;
        for (auto& v : shifted) v += t.shift;
        const double lhs = value(shifted);
        const double rhs = value(t.first) - t.shift;
        if (std::abs(lhs - rhs) > tol) {
          return CheckWitness{t.first, {}, t.shift, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::PositiveHomogeneity: {
        const double lambda = 3.0 * t.lambda;
        const double lhs = value(scale(lambda, t.first));
        const double rhs = lambda * value(t.first);
        if (std::abs(lhs - rhs) > tol * (1.0 + lambda)) {
          return CheckWitness{t.first, {}, lambda, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::Convexity: {
        const double lhs = value(blend(t.lambda, t.first, t.second));
        const double rhs =
            t.lambda * value(t.first) + (1.0 - t.lambda) * value(t.second);
        if (lhs > rhs + tol) {
          return CheckWitness{t.first, t.second, t.lambda, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::LawInvariance: {
        const auto perm = law_invariance_shuffle(rho, t.first, perm_rng);
        std::vector<double> permuted(t.first.size());
        for (std::size_t k = 0; k < perm.size(); ++k) {
          permuted[k] = t.first[perm[k]];
        }
        const double lhs = value(t.first);
        const double rhs = value(permuted);
        if (std::abs(lhs - rhs) > tol) {
          return CheckWitness{t.first, permuted, 0, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::ComonotonicAdditivity: {
        if (!is_comonotone(Position(space, t.first),
                           Position(space, t.second))) {
          return std::nullopt;
        }
        const double lhs = value(add(t.first, t.second));
        const double rhs = value(t.first) + value(t.second);
        if (std::abs(lhs - rhs) > tol) {
          return CheckWitness{t.first, t.second, 0, lhs, rhs};
        }
        return std::nullopt;
      }
      case Axiom::FatouLipschitz: {
        double gap = 0.0;
        for (std::size_t k = 0; k < t.first.size(); ++k) {
          gap = std::max(gap, std::abs(t.first[k] - t.second[k]));
        }
        const double lhs = std::abs(value(t.first) - value(t.second));
        if (lhs > gap + tol) {
          return CheckWitness{t.first, t.second, 0, lhs, gap};
        }
        return std::nullopt;
      }
      default:
        throw DomainError("check_rho_axiom: axiom applies to combinations");
    }
  };

  const bool comonotone = axiom == Axiom::ComonotonicAdditivity;
  return run_search("rho=" + rho.f.label(), axiom, trials, attack,
                    make_trials(dim, seed, trials, comonotone));
}

CheckReport lipschitz_check(const RiskBundle& rho, std::uint64_t seed,
                            std::size_t trials) {
  return check_rho_axiom(rho, Axiom::FatouLipschitz, seed, trials);
}

}  // namespace riskcomb
