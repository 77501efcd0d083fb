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

#include "riskcomb/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <type_traits>

#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"
#include "riskcomb/simplex.hpp"

namespace riskcomb {

namespace {

constexpr double kDensitySlack = 1e-10;

void require_coherent(const RiskMeasureSpec& spec) {
  if (!spec.is_coherent()) {
    throw UnsupportedError("duality: '" + spec.label() +
                           "' is not coherent; general convex penalties are "
                           "out of scope");
  }
}

void require_coherent_combination(const CombinationSpec& f) {
  if (!f.is_coherent_combination()) {
    throw UnsupportedError("duality: combination '" + f.label() +
                           "' is not convex");
  }
}

template <typename S>
S scalar_from(double v) {
  if constexpr (std::is_same_v<S, double>) {
    return v;
  } else {
    return S(v);
  }
}

template <typename S>
std::vector<std::pair<S, S>> steps_as(const Spectrum& phi) {
  std::vector<std::pair<S, S>> steps;
  steps.reserve(phi.steps().size());
  for (const auto& [start, level] : phi.steps()) {
    if constexpr (std::is_same_v<S, double>) {
      steps.emplace_back(to_double(start), to_double(level));
    } else {
      steps.emplace_back(start, level);
    }
  }
  return steps;
}

template <typename S>
S phi_integral_to(const std::vector<std::pair<S, S>>& steps, const S& t) {
  S total(0);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const S& start = steps[i].first;
    if (start >= t) break;
    S end = (i + 1 < steps.size()) ? steps[i + 1].first : S(1);
    if (end > t) end = t;
    total += steps[i].second * (end - start);
  }
  return total;
}

/// The spectral form shared by Spectral and EsMixture kinds.
std::optional<Spectrum> spectral_form(const RiskMeasureSpec& spec) {
  if (spec.kind() == MeasureKind::Spectral) return spec.spectrum();
  if (spec.kind() == MeasureKind::EsMixture) {
    return phi_from_m(spec.mixture());
  }
  return std::nullopt;
}

void require_shared_space(const SpacePtr& a, const SpacePtr& b,
                          const char* what) {
  if (!same_space(a, b)) {
    throw StructuralError(std::string(what) + ": inputs on different spaces");
  }
}

std::vector<std::size_t> ascending_payoff_order(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

template <typename S>
struct GreedyResult {
  S value{};
  std::vector<S> q;
};

/// Hardy-Littlewood construction: worst payoffs soak up the largest
/// admissible density.  Ties in payoff are broken by outcome index.
template <typename S>
GreedyResult<S> greedy_dual(const RiskMeasureSpec& spec,
                            const std::vector<double>& x,
                            const std::vector<double>& ref) {
  const std::size_t n = x.size();
  const auto order = ascending_payoff_order(x);
  std::vector<S> q(n, S(0));

  const bool ml_like =
      spec.kind() == MeasureKind::MaxLoss ||
      (spec.kind() == MeasureKind::ExpectedShortfall && spec.alpha() == 0.0);

  if (spec.kind() == MeasureKind::ExpectedLoss) {
    for (std::size_t k = 0; k < n; ++k) q[k] = scalar_from<S>(ref[k]);
  } else if (ml_like) {
    for (std::size_t k : order) {
      if (ref[k] > 0.0) {
        q[k] = S(1);
        break;
      }
    }
  } else if (spec.kind() == MeasureKind::ExpectedShortfall) {
    const S alpha = scalar_from<S>(spec.alpha());
    S remaining = alpha;
    for (std::size_t k : order) {
      if (ref[k] == 0.0 || remaining <= S(0)) continue;
      const S rk = scalar_from<S>(ref[k]);
      const S take = rk < remaining ? rk : remaining;
      q[k] = take / alpha;
      remaining -= take;
      if (remaining <= S(0)) break;
    }
  } else {
    const auto phi = spectral_form(spec);
    if (!phi) throw UnsupportedError("dual_evaluate: unsupported kind");
    const auto steps = steps_as<S>(*phi);
    S cum(0);
    for (std::size_t k : order) {
      if (ref[k] == 0.0) continue;
      const S next = cum + scalar_from<S>(ref[k]);
      q[k] = phi_integral_to(steps, next) - phi_integral_to(steps, cum);
      cum = next;
    }
  }

  GreedyResult<S> result;
  result.q = std::move(q);
  result.value = S(0);
  for (std::size_t k = 0; k < n; ++k) {
    result.value += result.q[k] * scalar_from<S>(-x[k]);
  }
  return result;
}

/// Snap LP/greedy dust so the vector passes the ScenarioMeasure invariants.
ScenarioMeasure make_certificate(const SpacePtr& space,
                                 std::vector<double> q) {
  double total = 0.0;
  for (double& v : q) {
    if (v < 0.0 && v > -1e-9) v = 0.0;
    total += v;
  }
  if (total > 0.0 && std::abs(total - 1.0) < 1e-6) {
    for (std::size_t k = q.size(); k-- > 0;) {
      if (q[k] > 0.0) {
        double head = 0.0;
        for (std::size_t j = 0; j < q.size(); ++j) {
          if (j != k) head += q[j];
        }
        q[k] = 1.0 - head;
        break;
      }
    }
  }
  return ScenarioMeasure(space, std::move(q));
}

}  // namespace

double min_penalty(const RiskMeasureSpec& spec, const ScenarioMeasure& q,
                   const ScenarioMeasure& reference) {
  require_coherent(spec);
  require_shared_space(q.space(), reference.space(), "min_penalty");
  const std::size_t n = q.size();

  // Absolute continuity with respect to the reference is common to every
  // coherent dual set here.
  for (std::size_t k = 0; k < n; ++k) {
    if (reference[k] == 0.0 && q[k] != 0.0) return kInfinitePenalty;
  }

  const bool ml_like =
      spec.kind() == MeasureKind::MaxLoss ||
      (spec.kind() == MeasureKind::ExpectedShortfall && spec.alpha() == 0.0);

  switch (spec.kind()) {
    case MeasureKind::ExpectedLoss: {
      for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(q[k] - reference[k]) > 1e-12) return kInfinitePenalty;
      }
      return 0.0;
    }
    case MeasureKind::MaxLoss:
      return 0.0;
    case MeasureKind::ExpectedShortfall: {
      if (ml_like) return 0.0;
      const double cap = 1.0 / spec.alpha() + kDensitySlack;
      for (std::size_t k = 0; k < n; ++k) {
        if (reference[k] > 0.0 && q[k] / reference[k] > cap) {
          return kInfinitePenalty;
        }
      }
      return 0.0;
    }
    case MeasureKind::Spectral:
    case MeasureKind::EsMixture: {
      const auto phi = spectral_form(spec);
      const auto steps = steps_as<double>(*phi);
      std::vector<std::size_t> support;
      for (std::size_t k = 0; k < n; ++k) {
        if (reference[k] > 0.0) support.push_back(k);
      }
      std::stable_sort(support.begin(), support.end(),
                       [&](std::size_t a, std::size_t b) {
                         return q[a] / reference[a] > q[b] / reference[b];
                       });
      double cum_q = 0.0;
      double cum_ref = 0.0;
      for (std::size_t k : support) {
        cum_q += q[k];
        cum_ref += reference[k];
        if (cum_q > phi_integral_to(steps, cum_ref) + kDensitySlack) {
          return kInfinitePenalty;
        }
      }
      return 0.0;
    }
    default:
      throw UnsupportedError("min_penalty: unsupported kind");
  }
}

double min_penalty(const RiskMeasureSpec& spec, const ScenarioMeasure& q) {
  return min_penalty(spec, q, ScenarioMeasure::base(q.space()));
}

DualCertificate dual_evaluate(const RiskMeasureSpec& spec, const Position& x,
                              const ScenarioMeasure& reference) {
  require_coherent(spec);
  require_shared_space(x.space(), reference.space(), "dual_evaluate");
  auto greedy = greedy_dual<double>(spec, x.values(), reference.probs());
  ScenarioMeasure maximizer = make_certificate(x.space(), std::move(greedy.q));
  double value = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    value += maximizer[k] * -x[k];
  }
  return DualCertificate{value, std::move(maximizer)};
}

DualCertificate dual_evaluate(const RiskMeasureSpec& spec, const Position& x) {
  return dual_evaluate(spec, x, ScenarioMeasure::base(x.space()));
}

Rational dual_evaluate_exact(const RiskMeasureSpec& spec, const Position& x,
                             const ScenarioMeasure& reference) {
  require_coherent(spec);
  require_shared_space(x.space(), reference.space(), "dual_evaluate_exact");
  return greedy_dual<Rational>(spec, x.values(), reference.probs()).value;
}

GammaReport gamma_f(const CombinationSpec& f, const IndexWeight& mu,
                    std::uint64_t seed, std::size_t trials) {
  require_coherent_combination(f);
  if (f.dimension() && *f.dimension() != mu.size()) {
    throw StructuralError("gamma_f: weight dimension mismatch");
  }

  double closed = kInfinitePenalty;
  switch (f.kind()) {
    case CombinationKind::WorstCase:
      closed = 0.0;
      break;
    case CombinationKind::Mixture: {
      closed = 0.0;
      const auto& nu = f.weights();
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (std::abs(mu[i] - nu[i]) > 1e-12) {
          closed = kInfinitePenalty;
          break;
        }
      }
      break;
    }
    case CombinationKind::UtilityOfProfile: {
      const auto& base = f.weights();
      const auto& pi = f.pi();
      bool inside = true;
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (base[i] == 0.0 && mu[i] != 0.0) inside = false;
      }
      if (inside && pi.kind() == MeasureKind::ExpectedLoss) {
        for (std::size_t i = 0; i < mu.size(); ++i) {
          if (std::abs(mu[i] - base[i]) > 1e-12) inside = false;
        }
      } else if (inside && pi.kind() == MeasureKind::ExpectedShortfall &&
                 pi.alpha() > 0.0) {
        const double cap = 1.0 / pi.alpha() + kDensitySlack;
        for (std::size_t i = 0; i < mu.size(); ++i) {
          if (base[i] > 0.0 && mu[i] / base[i] > cap) inside = false;
        }
      }
      // ML (and ES at level 0) admit every mu << base.
      closed = inside ? 0.0 : kInfinitePenalty;
      break;
    }
  }

  GammaReport report;
  report.value = closed;

  // sup_R { <mu, R> - f(R) } over sampled profiles never exceeds gamma_f.
  Rng rng(seed);
  double bound = -kInfinitePenalty;
  std::vector<std::vector<double>> samples;
  samples.push_back(std::vector<double>(mu.size(), 0.0));
  samples.push_back(std::vector<double>(mu.size(), 1.0));
  samples.push_back(std::vector<double>(mu.size(), -1.0));
  for (std::size_t i = 0; i < mu.size(); ++i) {
    std::vector<double> spike(mu.size(), 0.0);
    spike[i] = 1.0;
    samples.push_back(spike);
    spike[i] = -1.0;
    samples.push_back(spike);
  }
  while (samples.size() < trials) {
    samples.push_back(rng.vector(mu.size(), -10.0, 10.0));
  }
  for (const auto& r : samples) {
    double dot = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) dot += mu[i] * r[i];
    bound = std::max(bound, dot - combine(f, RiskProfile{r}));
  }
  report.sampled_lower_bound = bound;
  report.consistent =
      std::isinf(closed) || bound <= closed + 1e-10;
  return report;
}

namespace {

/// Creates the decomposition variables for one component's dual set and the
/// rows pinning them inside it.  Returns one variable per outcome.
template <typename S>
std::vector<std::size_t> add_component_dual_set(
    LpBuilder<S>& lp, const Component& comp,
    const std::vector<S>& objective) {
  require_coherent(comp.spec);
  const auto& ref = comp.scenario.probs();
  const std::size_t n = ref.size();
  std::vector<std::size_t> vars(n);

  const bool ml_like = comp.spec.kind() == MeasureKind::MaxLoss ||
                       (comp.spec.kind() == MeasureKind::ExpectedShortfall &&
                        comp.spec.alpha() == 0.0);

  auto add_vars = [&](auto upper_for) {
    for (std::size_t k = 0; k < n; ++k) {
      std::optional<S> ub = upper_for(k);
      if (ref[k] == 0.0) ub = S(0);
      vars[k] = lp.add_variable(objective.empty() ? S(0) : objective[k], ub);
    }
  };

  switch (comp.spec.kind()) {
    case MeasureKind::ExpectedLoss: {
      add_vars([&](std::size_t) { return std::optional<S>{}; });
      for (std::size_t k = 0; k < n; ++k) {
        lp.add_eq({{vars[k], S(1)}}, scalar_from<S>(ref[k]));
      }
      return vars;
    }
    case MeasureKind::MaxLoss:
    case MeasureKind::ExpectedShortfall: {
      if (ml_like) {
        add_vars([&](std::size_t) { return std::optional<S>{}; });
      } else {
        const S alpha = scalar_from<S>(comp.spec.alpha());
        add_vars([&](std::size_t k) {
          return std::optional<S>(scalar_from<S>(ref[k]) / alpha);
        });
      }
      std::vector<typename LpBuilder<S>::Term> total;
      for (std::size_t k = 0; k < n; ++k) total.push_back({vars[k], S(1)});
      lp.add_eq(std::move(total), S(1));
      return vars;
    }
    case MeasureKind::Spectral:
    case MeasureKind::EsMixture: {
      const auto phi = spectral_form(comp.spec);
      const auto steps = steps_as<S>(*phi);
      std::vector<std::size_t> support;
      for (std::size_t k = 0; k < n; ++k) {
        if (ref[k] > 0.0) support.push_back(k);
      }
      if (support.size() > 16) {
        throw UnsupportedError(
            "decomposition: spectral dual sets need <= 16 support outcomes");
      }
      add_vars([&](std::size_t) { return std::optional<S>{}; });
      // Q(A) <= integral of phi up to ref(A), for every nonempty subset A of
      // the support; with the full-set equality this pins the polytope.
      const std::size_t subsets = std::size_t(1) << support.size();
      for (std::size_t mask = 1; mask + 1 < subsets; ++mask) {
        std::vector<typename LpBuilder<S>::Term> terms;
        S ref_mass(0);
        for (std::size_t j = 0; j < support.size(); ++j) {
          if (mask & (std::size_t(1) << j)) {
            terms.push_back({vars[support[j]], S(1)});
            ref_mass += scalar_from<S>(ref[support[j]]);
          }
        }
        lp.add_le(std::move(terms), phi_integral_to(steps, ref_mass));
      }
      std::vector<typename LpBuilder<S>::Term> total;
      for (std::size_t k : support) total.push_back({vars[k], S(1)});
      lp.add_eq(std::move(total), S(1));
      return vars;
    }
    default:
      throw UnsupportedError("decomposition: unsupported component kind");
  }
}

template <typename S>
MixturePenaltyResult mixture_penalty_core(
    const std::vector<Component>& components, const IndexWeight& mu,
    const ScenarioMeasure& q) {
  const std::size_t n = q.size();
  LpBuilder<S> lp;
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> active;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (mu[i] == 0.0) continue;  // unconstrained in the decomposition
    active.emplace_back(
        i, add_component_dual_set<S>(lp, components[i], {}));
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<typename LpBuilder<S>::Term> terms;
    for (const auto& [i, vars] : active) {
      terms.push_back({vars[k], scalar_from<S>(mu[i])});
    }
    lp.add_eq(std::move(terms), scalar_from<S>(q[k]));
  }

  MixturePenaltyResult result;
  const auto sol = lp.feasible();
  if (sol.status != LpStatus::Optimal) return result;

  result.penalty = 0.0;
  result.component_measures.assign(components.size(), {});
  for (std::size_t i = 0; i < components.size(); ++i) {
    result.component_measures[i] = components[i].scenario.probs();
  }
  for (const auto& [i, vars] : active) {
    std::vector<double> probs(n);
    for (std::size_t k = 0; k < n; ++k) {
      if constexpr (std::is_same_v<S, double>) {
        probs[k] = sol.x[vars[k]];
      } else {
        probs[k] = to_double(sol.x[vars[k]]);
      }
    }
    result.component_measures[i] = std::move(probs);
  }
  return result;
}

}  // namespace

MixturePenaltyResult mixture_penalty_detail(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios, const IndexWeight& mu,
    const ScenarioMeasure& q, LpMode mode) {
  const auto components = make_components(specs, scenarios);
  if (mu.size() != components.size()) {
    throw StructuralError("mixture_penalty: weight dimension mismatch");
  }
  for (const auto& comp : components) {
    require_coherent(comp.spec);
    require_shared_space(comp.scenario.space(), q.space(), "mixture_penalty");
  }
  if (mode == LpMode::Exact) {
    return mixture_penalty_core<Rational>(components, mu, q);
  }
  return mixture_penalty_core<double>(components, mu, q);
}

double mixture_penalty(const std::vector<RiskMeasureSpec>& specs,
                       const std::vector<ScenarioMeasure>& scenarios,
                       const IndexWeight& mu, const ScenarioMeasure& q,
                       LpMode mode) {
  return mixture_penalty_detail(specs, scenarios, mu, q, mode).penalty;
}

namespace {

/// Maximize E_Q[-X] over one component's dual set by LP; returns the optimum
/// and the maximizing measure.
std::pair<double, std::vector<double>> component_dual_max(
    const Component& comp, const std::vector<double>& x) {
  LpBuilder<double> lp;
  std::vector<double> objective(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) objective[k] = -x[k];
  const auto vars = add_component_dual_set<double>(lp, comp, objective);
  const auto sol = lp.maximize();
  if (sol.status != LpStatus::Optimal) {
    throw InternalError("composed_dual_check: component LP infeasible");
  }
  std::vector<double> probs(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) probs[k] = sol.x[vars[k]];
  return {sol.objective, std::move(probs)};
}

/// Weights maximizing <nu, c> over the utility's dual weight set.
std::vector<double> utility_optimal_weights(const RiskMeasureSpec& pi,
                                            const IndexWeight& mu,
                                            const std::vector<double>& c) {
  const std::size_t m = c.size();
  std::vector<double> nu(m, 0.0);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return c[a] > c[b];
  });
  switch (pi.kind()) {
    case MeasureKind::ExpectedLoss:
      return mu.weights();
    case MeasureKind::MaxLoss:
      for (std::size_t i : order) {
        if (mu[i] > 0.0) {
          nu[i] = 1.0;
          return nu;
        }
      }
      throw InternalError("utility_optimal_weights: empty support");
    case MeasureKind::ExpectedShortfall: {
      const double alpha = pi.alpha();
      if (alpha == 0.0) {
        for (std::size_t i : order) {
          if (mu[i] > 0.0) {
            nu[i] = 1.0;
            return nu;
          }
        }
      }
      double remaining = alpha;
      for (std::size_t i : order) {
        if (mu[i] == 0.0 || remaining <= 0.0) continue;
        const double take = std::min(mu[i], remaining);
        nu[i] = take / alpha;
        remaining -= take;
      }
      return nu;
    }
    default:
      throw UnsupportedError("composed_dual_check: VaR utility not convex");
  }
}

}  // namespace

DualCheckReport composed_dual_check(const CombinationSpec& f,
                                    const std::vector<RiskMeasureSpec>& specs,
                                    const std::vector<ScenarioMeasure>& scenarios,
                                    const Position& x, double tol) {
  require_coherent_combination(f);
  const auto components = make_components(specs, scenarios);
  for (const auto& comp : components) {
    require_coherent(comp.spec);
    require_shared_space(comp.scenario.space(), x.space(),
                         "composed_dual_check");
  }
  if (f.dimension() && *f.dimension() != components.size()) {
    throw StructuralError("composed_dual_check: weight dimension mismatch");
  }

  const double lhs = compose(f, specs, scenarios, x);
  double rhs = 0.0;
  std::vector<double> certificate(x.size(), 0.0);

  switch (f.kind()) {
    case CombinationKind::Mixture: {
      // One joint LP over the decomposable dual polytope, objective already
      // weighted by mu.
      const auto& mu = f.weights();
      LpBuilder<double> lp;
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> active;
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (mu[i] == 0.0) continue;
        std::vector<double> objective(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
          objective[k] = mu[i] * -x[k];
        }
        active.emplace_back(
            i, add_component_dual_set<double>(lp, components[i], objective));
      }
      const auto sol = lp.maximize();
      if (sol.status != LpStatus::Optimal) {
        throw InternalError("composed_dual_check: decomposition LP failed");
      }
      rhs = sol.objective;
      for (const auto& [i, vars] : active) {
        for (std::size_t k = 0; k < x.size(); ++k) {
          certificate[k] += mu[i] * sol.x[vars[k]];
        }
      }
      break;
    }
    case CombinationKind::WorstCase: {
      // Vertex reduction: the hull maximum sits on one component's dual set.
      bool first = true;
      for (const auto& comp : components) {
        auto [value, probs] = component_dual_max(comp, x.values());
        if (first || value > rhs) {
          rhs = value;
          certificate = std::move(probs);
          first = false;
        }
      }
      break;
    }
    case CombinationKind::UtilityOfProfile: {
      const auto& mu = f.weights();
      std::vector<double> c(components.size());
      std::vector<std::vector<double>> probs(components.size());
      for (std::size_t i = 0; i < components.size(); ++i) {
        auto [value, p] = component_dual_max(components[i], x.values());
        c[i] = value;
        probs[i] = std::move(p);
      }
      rhs = combine(f, RiskProfile{c});
      const auto nu = utility_optimal_weights(f.pi(), mu, c);
      for (std::size_t i = 0; i < components.size(); ++i) {
        for (std::size_t k = 0; k < x.size(); ++k) {
          certificate[k] += nu[i] * probs[i][k];
        }
      }
      break;
    }
  }

  DualCheckReport report{
      lhs, rhs, std::abs(lhs - rhs), std::abs(lhs - rhs) <= tol,
      make_certificate(x.space(), std::move(certificate))};
  return report;
}

WorstCasePenaltyReport worst_case_penalty_check(
    const std::vector<RiskMeasureSpec>& specs,
    const std::vector<ScenarioMeasure>& scenarios, const ScenarioMeasure& q) {
  const auto components = make_components(specs, scenarios);
  WorstCasePenaltyReport report;
  for (const auto& comp : components) {
    report.membership_inf = std::min(
        report.membership_inf, min_penalty(comp.spec, q, comp.scenario));
  }
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto delta = IndexWeight::dirac(components.size(), i);
    report.lp_inf = std::min(
        report.lp_inf, mixture_penalty(specs, scenarios, delta, q));
  }
  report.consistent = report.membership_inf == report.lp_inf;
  return report;
}

}  // namespace riskcomb
