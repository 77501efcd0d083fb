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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"

using namespace riskcomb;

namespace {

const std::vector<double> kX = {-10.0, -5.0, 0.0, 5.0};

SpacePtr uniform4() { return FiniteProbSpace::uniform(4); }

ScenarioMeasure density_scenario(const SpacePtr& space,
                                 const std::vector<double>& density) {
  std::vector<double> probs(density.size());
  for (std::size_t k = 0; k < density.size(); ++k) {
    probs[k] = density[k] * space->base_probs()[k];
  }
  return ScenarioMeasure(space, probs);
}

}  // namespace

TEST_CASE("min_penalty membership closed cases") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const auto es50 = RiskMeasureSpec::expected_shortfall(0.5);

  CHECK(min_penalty(es50, density_scenario(space, {2.0, 2.0, 0.0, 0.0})) ==
        0.0);
  CHECK(std::isinf(
      min_penalty(es50, density_scenario(space, {2.4, 1.6, 0.0, 0.0}))));

  const auto el = RiskMeasureSpec::expected_loss();
  CHECK(min_penalty(el, base) == 0.0);
  CHECK(std::isinf(
      min_penalty(el, ScenarioMeasure(space, {0.3, 0.3, 0.2, 0.2}))));

  const auto ml = RiskMeasureSpec::max_loss();
  CHECK(min_penalty(ml, density_scenario(space, {4.0, 0.0, 0.0, 0.0})) == 0.0);

  CHECK_THROWS_AS(min_penalty(RiskMeasureSpec::value_at_risk(0.5), base),
                  UnsupportedError);
}

TEST_CASE("spectral membership matches the reach of the greedy construction") {
  Rng rng(77);
  auto space = FiniteProbSpace::uniform(4);
  const auto phi =
      Spectrum::from_doubles({{0.0, 3.0}, {0.25, 1.0}, {0.5, 0.0}});
  const auto spec = RiskMeasureSpec::spectral(phi);
  // The greedy maximizer for any payoff ordering must always be a member.
  for (int t = 0; t < 50; ++t) {
    const Position x(space, rng.vector(4, -10.0, 10.0));
    const auto dual = dual_evaluate(spec, x);
    CHECK(min_penalty(spec, dual.maximizer) == 0.0);
  }
  // Too much mass on too small a set is rejected.
  CHECK(std::isinf(
      min_penalty(spec, density_scenario(space, {3.2, 0.8, 0.0, 0.0}))));
}

TEST_CASE("dual_evaluate worked examples") {
  auto space = uniform4();
  const Position x(space, kX);

  const auto es = dual_evaluate(RiskMeasureSpec::expected_shortfall(0.5), x);
  CHECK(es.value == 7.5);
  CHECK(es.maximizer.probs() == std::vector<double>{0.5, 0.5, 0.0, 0.0});

  const auto ml = dual_evaluate(RiskMeasureSpec::max_loss(), x);
  CHECK(ml.value == 10.0);
  CHECK(ml.maximizer.probs() == std::vector<double>{1.0, 0.0, 0.0, 0.0});

  const auto el = dual_evaluate(RiskMeasureSpec::expected_loss(), x);
  CHECK(el.value == 2.5);
}

TEST_CASE("representation equality on random spaces up to 8 atoms") {
  Rng rng(101);
  for (std::size_t n : {4, 5, 6, 7, 8}) {
    auto space = FiniteProbSpace::uniform(n);
    const auto base = ScenarioMeasure::base(space);
    const std::vector<RiskMeasureSpec> specs = {
        RiskMeasureSpec::expected_loss(),
        RiskMeasureSpec::expected_shortfall(0.1),
        RiskMeasureSpec::expected_shortfall(0.25),
        RiskMeasureSpec::expected_shortfall(0.5),
        RiskMeasureSpec::expected_shortfall(0.9),
        RiskMeasureSpec::max_loss(),
        RiskMeasureSpec::spectral(
            Spectrum::from_doubles({{0.0, 2.0}, {0.5, 0.0}})),
        RiskMeasureSpec::spectral(
            Spectrum::from_doubles({{0.0, 1.8}, {0.25, 1.0}, {0.75, 0.2}})),
        RiskMeasureSpec::es_mixture(
            EsMixtureMeasure::from_doubles({{0.5, 0.5}, {0.25, 0.5}}))};
    for (int t = 0; t < 20; ++t) {
      const Position x(space, rng.vector(n, -12.0, 12.0));
      for (const auto& spec : specs) {
        const double primal = evaluate(spec, x, base);
        const auto dual = dual_evaluate(spec, x);
        CHECK(std::abs(primal - dual.value) <= 1e-8);
        CHECK(min_penalty(spec, dual.maximizer) == 0.0);
      }
    }
  }
}

TEST_CASE("exact greedy equals exhaustive vertex enumeration on 4 atoms") {
  Rng rng(103);
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const std::vector<RiskMeasureSpec> specs = {
      RiskMeasureSpec::expected_loss(),
      RiskMeasureSpec::expected_shortfall(0.1),
      RiskMeasureSpec::expected_shortfall(0.5),
      RiskMeasureSpec::max_loss(),
      RiskMeasureSpec::spectral(
          Spectrum::from_doubles({{0.0, 3.0}, {0.25, 1.0}, {0.5, 0.0}}))};
  for (int t = 0; t < 40; ++t) {
    const auto values = rng.vector(4, -10.0, 10.0);
    const Position x(space, values);
    for (const auto& spec : specs) {
      const Rational greedy = dual_evaluate_exact(spec, x, base);
      const Rational enumerated =
          oracle::dual_max_enumerated(spec, values, space->base_probs());
      CHECK(greedy == enumerated);
    }
  }
}

TEST_CASE("greedy ties break by outcome index and the value is unaffected") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const Position tied(space, {5.0, -10.0, -10.0, 0.0});
  const auto spec = RiskMeasureSpec::expected_shortfall(0.5);
  const auto dual = dual_evaluate(spec, tied);
  CHECK(dual.maximizer.probs() == std::vector<double>{0.0, 0.5, 0.5, 0.0});
  CHECK(dual.value == 10.0);
  // Tie order cannot move the optimum: exhaustive enumeration agrees.
  CHECK(dual_evaluate_exact(spec, tied, base) ==
        oracle::dual_max_enumerated(spec, tied.values(),
                                    space->base_probs()));
}

TEST_CASE("penalty nesting: smaller ES level admits more measures") {
  Rng rng(107);
  auto space = uniform4();
  const auto es25 = RiskMeasureSpec::expected_shortfall(0.25);
  const auto es50 = RiskMeasureSpec::expected_shortfall(0.5);
  for (int t = 0; t < 200; ++t) {
    const ScenarioMeasure q(space, rng.simplex(4));
    // alpha1 >= alpha2 gives penalty(ES(a1)) >= penalty(ES(a2)) pointwise.
    CHECK(min_penalty(es50, q) >= min_penalty(es25, q));
  }
}

TEST_CASE("gamma_f closed forms with sampled certificates") {
  const auto wc = CombinationSpec::worst_case();
  const auto mix = CombinationSpec::mixture(IndexWeight({0.5, 0.5}));

  const auto g1 = gamma_f(wc, IndexWeight({0.3, 0.7}), 11);
  CHECK(g1.value == 0.0);
  CHECK(g1.consistent);
  CHECK(g1.sampled_lower_bound <= 1e-10);

  const auto g2 = gamma_f(mix, IndexWeight({0.5, 0.5}), 12);
  CHECK(g2.value == 0.0);
  CHECK(g2.consistent);

  const auto g3 = gamma_f(mix, IndexWeight({1.0, 0.0}), 13);
  CHECK(std::isinf(g3.value));
  CHECK(g3.consistent);
  CHECK(g3.sampled_lower_bound > 0.1);  // the spike profiles witness it

  const auto ut = CombinationSpec::utility_of_profile(
      RiskMeasureSpec::expected_shortfall(0.5), IndexWeight({0.5, 0.5}));
  CHECK(gamma_f(ut, IndexWeight({0.75, 0.25}), 14).value == 0.0);
  CHECK(std::isinf(gamma_f(ut, IndexWeight({0.0, 1.0}), 15).value) ==
        false);  // density 2 == 1/alpha, inside the box
  CHECK(std::isinf(
      gamma_f(CombinationSpec::utility_of_profile(
                  RiskMeasureSpec::expected_shortfall(0.25),
                  IndexWeight({0.9, 0.1})),
              IndexWeight({0.0, 1.0}), 16)
          .value));  // density 10 > 4

  CHECK_THROWS_AS(gamma_f(CombinationSpec::utility_of_profile(
                              RiskMeasureSpec::value_at_risk(0.5),
                              IndexWeight({0.5, 0.5})),
                          IndexWeight({0.5, 0.5}), 17),
                  UnsupportedError);
}

TEST_CASE("mixture penalty worked examples") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const std::vector<RiskMeasureSpec> specs = {
      RiskMeasureSpec::expected_shortfall(0.5),
      RiskMeasureSpec::expected_shortfall(0.25)};
  const IndexWeight half({0.5, 0.5});

  SUBCASE("density (3,1,0,0) decomposes") {
    const auto q = density_scenario(space, {3.0, 1.0, 0.0, 0.0});
    const auto detail = mixture_penalty_detail(specs, {base}, half, q);
    REQUIRE(detail.penalty == 0.0);
    // The mixture of the decomposition parts reproduces q.
    REQUIRE(detail.component_measures.size() == 2);
    for (std::size_t k = 0; k < 4; ++k) {
      const double mixed = 0.5 * detail.component_measures[0][k] +
                           0.5 * detail.component_measures[1][k];
      CHECK(mixed == doctest::Approx(q[k]).epsilon(1e-9));
    }
    // Parts belong to their own dual sets.
    CHECK(min_penalty(specs[0],
                      ScenarioMeasure(space, detail.component_measures[0])) ==
          0.0);
    CHECK(min_penalty(specs[1],
                      ScenarioMeasure(space, detail.component_measures[1])) ==
          0.0);
  }
  SUBCASE("density above the cap 3 is infeasible") {
    const auto q = density_scenario(space, {3.2, 0.8, 0.0, 0.0});
    CHECK(std::isinf(mixture_penalty(specs, {base}, half, q)));
    CHECK(std::isinf(
        mixture_penalty(specs, {base}, half, q, LpMode::Exact)));
  }
  SUBCASE("point-mass weights reduce to single membership") {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
      const ScenarioMeasure q(space, rng.simplex(4));
      CHECK(mixture_penalty(specs, {base}, IndexWeight({1.0, 0.0}), q) ==
            min_penalty(specs[0], q));
      CHECK(mixture_penalty(specs, {base}, IndexWeight({0.0, 1.0}), q) ==
            min_penalty(specs[1], q));
    }
  }
  SUBCASE("exact and fast modes agree on a density grid") {
    for (double d1 = 0.0; d1 <= 4.01; d1 += 0.5) {
      for (double d2 = 0.0; d2 + d1 <= 4.01; d2 += 0.5) {
        const double d3 = 4.0 - d1 - d2;
        if (d3 < 0.0 || d3 > 4.0) continue;
        const auto q = density_scenario(space, {d1, d2, d3, 0.0});
        const double fast = mixture_penalty(specs, {base}, half, q);
        const double exact =
            mixture_penalty(specs, {base}, half, q, LpMode::Exact);
        CHECK(fast == exact);
      }
    }
  }
}

TEST_CASE("composed dual check worked examples") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const Position x(space, kX);

  SUBCASE("mixture of two ES levels") {
    const auto report = composed_dual_check(
        CombinationSpec::mixture(IndexWeight({0.5, 0.5})),
        {RiskMeasureSpec::expected_shortfall(0.5),
         RiskMeasureSpec::expected_shortfall(0.25)},
        {base}, x);
    CHECK(report.passed);
    CHECK(report.lhs == doctest::Approx(8.75));
    CHECK(report.rhs == doctest::Approx(8.75).epsilon(1e-9));
  }
  SUBCASE("worst case of EL and ES") {
    const auto report = composed_dual_check(
        CombinationSpec::worst_case(),
        {RiskMeasureSpec::expected_loss(),
         RiskMeasureSpec::expected_shortfall(0.5)},
        {base}, x);
    CHECK(report.passed);
    CHECK(report.lhs == doctest::Approx(7.5));
    CHECK(report.rhs == doctest::Approx(7.5).epsilon(1e-9));
  }
  SUBCASE("constant positions hit the translation normalization") {
    const Position c(space, {3.0, 3.0, 3.0, 3.0});
    const auto report = composed_dual_check(
        CombinationSpec::mixture(IndexWeight({0.5, 0.5})),
        {RiskMeasureSpec::expected_shortfall(0.5),
         RiskMeasureSpec::expected_shortfall(0.25)},
        {base}, c);
    CHECK(report.lhs == doctest::Approx(-3.0));
    CHECK(report.rhs == doctest::Approx(-3.0));
  }
}

TEST_CASE("composed dual check on random bundles") {
  Rng rng(211);
  auto space = FiniteProbSpace::uniform(5);
  const auto base = ScenarioMeasure::base(space);
  const ScenarioMeasure skew(space, {0.3, 0.25, 0.2, 0.15, 0.1});

  const std::vector<CombinationSpec> combos = {
      CombinationSpec::worst_case(),
      CombinationSpec::mixture(IndexWeight({0.25, 0.75})),
      CombinationSpec::utility_of_profile(RiskMeasureSpec::expected_loss(),
                                          IndexWeight({0.4, 0.6})),
      CombinationSpec::utility_of_profile(RiskMeasureSpec::max_loss(),
                                          IndexWeight({0.5, 0.5})),
      CombinationSpec::utility_of_profile(
          RiskMeasureSpec::expected_shortfall(0.5), IndexWeight({0.5, 0.5}))};
  for (int t = 0; t < 25; ++t) {
    const Position x(space, rng.vector(5, -10.0, 10.0));
    for (const auto& f : combos) {
      const auto report = composed_dual_check(
          f, {RiskMeasureSpec::expected_shortfall(0.5)}, {base, skew}, x);
      CHECK(report.passed);
      CHECK(report.gap <= 1e-8);
    }
  }
}

TEST_CASE("sup-integral interchange: the joint LP splits per component") {
  Rng rng(223);
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const std::vector<RiskMeasureSpec> specs = {
      RiskMeasureSpec::expected_shortfall(0.5),
      RiskMeasureSpec::expected_shortfall(0.25)};
  const IndexWeight mu({0.35, 0.65});
  for (int t = 0; t < 30; ++t) {
    const Position x(space, rng.vector(4, -10.0, 10.0));
    const auto joint = composed_dual_check(CombinationSpec::mixture(mu), specs,
                                           {base}, x);
    double split = 0.0;
    for (std::size_t i = 0; i < specs.size(); ++i) {
      split += mu[i] * dual_evaluate(specs[i], x).value;
    }
    CHECK(joint.rhs == doctest::Approx(split).epsilon(1e-9));
  }
}

TEST_CASE("worst-case penalty collapse") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const std::vector<RiskMeasureSpec> specs = {
      RiskMeasureSpec::expected_shortfall(0.5),
      RiskMeasureSpec::expected_shortfall(0.25)};

  SUBCASE("a density only the wider set admits") {
    const auto q = density_scenario(space, {2.4, 1.6, 0.0, 0.0});
    const auto report = worst_case_penalty_check(specs, {base}, q);
    CHECK(report.membership_inf == 0.0);
    CHECK(report.lp_inf == 0.0);
    CHECK(report.consistent);
  }
  SUBCASE("a point mass beyond every cap") {
    auto space5 = FiniteProbSpace::uniform(5);
    const auto base5 = ScenarioMeasure::base(space5);
    const ScenarioMeasure q(space5, {1.0, 0.0, 0.0, 0.0, 0.0});
    const auto report = worst_case_penalty_check(specs, {base5}, q);
    CHECK(std::isinf(report.membership_inf));
    CHECK(std::isinf(report.lp_inf));
    CHECK(report.consistent);
  }
  SUBCASE("the base measure always belongs") {
    const auto report = worst_case_penalty_check(specs, {base}, base);
    CHECK(report.membership_inf == 0.0);
    CHECK(report.consistent);
  }
  SUBCASE("random densities never disagree") {
    Rng rng(229);
    for (int t = 0; t < 200; ++t) {
      const ScenarioMeasure q(space, rng.simplex(4));
      CHECK(worst_case_penalty_check(specs, {base}, q).consistent);
    }
  }
}

TEST_CASE("spectral components ride the subset-constraint LP") {
  Rng rng(239);
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const auto spectral = RiskMeasureSpec::spectral(
      Spectrum::from_doubles({{0.0, 3.0}, {0.25, 1.0}, {0.5, 0.0}}));
  const std::vector<RiskMeasureSpec> specs = {
      spectral, RiskMeasureSpec::expected_shortfall(0.5)};

  SUBCASE("point-mass weights reduce to spectral membership") {
    for (int t = 0; t < 60; ++t) {
      const ScenarioMeasure q(space, rng.simplex(4));
      CHECK(mixture_penalty(specs, {base}, IndexWeight({1.0, 0.0}), q) ==
            min_penalty(spectral, q));
    }
  }
  SUBCASE("composed dual check with a spectral component") {
    for (int t = 0; t < 20; ++t) {
      const Position x(space, rng.vector(4, -10.0, 10.0));
      for (const auto& f :
           {CombinationSpec::worst_case(),
            CombinationSpec::mixture(IndexWeight({0.4, 0.6}))}) {
        CHECK(composed_dual_check(f, specs, {base}, x).passed);
      }
    }
  }
  SUBCASE("relative to a skewed reference scenario") {
    const ScenarioMeasure skew(space, {0.4, 0.3, 0.2, 0.1});
    for (int t = 0; t < 20; ++t) {
      const Position x(space, rng.vector(4, -10.0, 10.0));
      const auto report = composed_dual_check(
          CombinationSpec::mixture(IndexWeight({0.5, 0.5})), {spectral},
          {base, skew}, x);
      CHECK(report.passed);
    }
  }
}

TEST_CASE("dual evaluation against references with null outcomes") {
  auto space = uniform4();
  const ScenarioMeasure partial(space, {0.5, 0.5, 0.0, 0.0});
  const Position x(space, kX);
  // Null outcomes of the reference never receive dual mass.
  for (const auto& spec :
       {RiskMeasureSpec::expected_shortfall(0.5), RiskMeasureSpec::max_loss(),
        RiskMeasureSpec::spectral(
            Spectrum::from_doubles({{0.0, 2.0}, {0.5, 0.0}}))}) {
    const auto dual = dual_evaluate(spec, x, partial);
    CHECK(dual.maximizer[2] == 0.0);
    CHECK(dual.maximizer[3] == 0.0);
    CHECK(dual.value ==
          doctest::Approx(evaluate(spec, x, partial)).epsilon(1e-10));
    CHECK(min_penalty(spec, dual.maximizer, partial) == 0.0);
  }
  // A measure with mass outside the reference support is never a member.
  const ScenarioMeasure outside(space, {0.0, 0.0, 0.5, 0.5});
  CHECK(std::isinf(
      min_penalty(RiskMeasureSpec::max_loss(), outside, partial)));
}

TEST_CASE("decomposition parts form a valid probability measure") {
  // Mixtures of member measures stay probability measures; the library
  // validates this when reassembling certificates.
  Rng rng(233);
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const std::vector<RiskMeasureSpec> specs = {
      RiskMeasureSpec::expected_shortfall(0.5),
      RiskMeasureSpec::max_loss()};
  for (int t = 0; t < 20; ++t) {
    const Position x(space, rng.vector(4, -10.0, 10.0));
    const auto report = composed_dual_check(
        CombinationSpec::mixture(IndexWeight({0.6, 0.4})), specs, {base}, x);
    double total = 0.0;
    for (double p : report.certificate.probs()) {
      CHECK(p >= 0.0);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}
