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

#include "riskcomb/kusuoka.hpp"

#include <doctest.h>

#include <cmath>

#include "riskcomb/duality.hpp"
#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"

using namespace riskcomb;

namespace {

const std::vector<double> kX = {-10.0, -5.0, 0.0, 5.0};

SpacePtr uniform4() { return FiniteProbSpace::uniform(4); }

}  // namespace

TEST_CASE("es_mixture_evaluate worked examples") {
  auto space = uniform4();
  const Position x(space, kX);
  const auto base = ScenarioMeasure::base(space);

  CHECK(es_mixture_evaluate(EsMixtureMeasure::dirac(Rational(1, 2)), x, base) ==
        7.5);
  CHECK(es_mixture_evaluate(EsMixtureMeasure::dirac(Rational(1)), x, base) ==
        2.5);
  CHECK(es_mixture_evaluate(
            EsMixtureMeasure({{Rational(1, 2), Rational(1, 2)},
                              {Rational(1, 4), Rational(1, 2)}}),
            x, base) == 8.75);
}

TEST_CASE("mixture evaluation equals the spectral route within 1e-10") {
  Rng rng(51);
  auto space = FiniteProbSpace::uniform(6);
  for (int t = 0; t < 80; ++t) {
    std::vector<std::pair<double, double>> atoms;
    const std::size_t pieces = 1 + rng.index(3);
    double mass_left = 1.0;
    for (std::size_t j = 0; j < pieces; ++j) {
      const double mass =
          (j + 1 == pieces) ? mass_left : mass_left * rng.uniform(0.2, 0.8);
      atoms.push_back({rng.uniform(0.05, 1.0), mass});
      mass_left -= mass;
    }
    const auto m = EsMixtureMeasure::from_doubles(atoms);
    const Position x(space, rng.vector(6, -10.0, 10.0));
    const ScenarioMeasure q(space, rng.simplex(6));
    const double via_mixture = es_mixture_evaluate(m, x, q);
    const double via_spectrum =
        evaluate(RiskMeasureSpec::spectral(phi_from_m(m)), x, q);
    CHECK(via_mixture == doctest::Approx(via_spectrum).epsilon(1e-10));
    const auto dual =
        dual_evaluate(RiskMeasureSpec::es_mixture(m), x, q);
    CHECK(via_mixture == doctest::Approx(dual.value).epsilon(1e-8));
  }
}

TEST_CASE("mixture commutes with representation") {
  // sum_i mu_i integral(ES dm_i) equals integral(ES d(sum_i mu_i m_i)).
  Rng rng(53);
  auto space = FiniteProbSpace::uniform(5);
  const auto base = ScenarioMeasure::base(space);
  const std::vector<EsMixtureMeasure> ms = {
      EsMixtureMeasure::dirac(Rational(1, 2)),
      EsMixtureMeasure::dirac(Rational(1, 4)),
      EsMixtureMeasure({{Rational(3, 4), Rational(1, 2)},
                        {Rational(1), Rational(1, 2)}})};
  const std::vector<double> mu = {0.25, 0.25, 0.5};
  const auto mixed = mixture_of_measures(ms, mu);
  for (int t = 0; t < 50; ++t) {
    const Position x(space, rng.vector(5, -10.0, 10.0));
    double split = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      split += mu[i] * es_mixture_evaluate(ms[i], x, base);
    }
    CHECK(es_mixture_evaluate(mixed, x, base) ==
          doctest::Approx(split).epsilon(1e-12));
  }
}

TEST_CASE("law-invariant composed check, mixture branch") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);
  const ScenarioMeasure skew(space, {0.4, 0.3, 0.2, 0.1});
  const Position x(space, kX);
  const std::vector<double> grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                    0.6, 0.7, 0.8, 0.9, 1.0};

  SUBCASE("worked two-scenario example") {
    // ES(.5) under the skewed scenario is 9, so the mixture sits at 8.25.
    CHECK(evaluate(RiskMeasureSpec::expected_shortfall(0.5), x, skew) == 9.0);
    const auto report = law_invariant_composed_check(
        CombinationSpec::mixture(IndexWeight({0.5, 0.5})),
        RiskMeasureSpec::expected_shortfall(0.5), {base, skew}, x, grid);
    CHECK(report.passed);
    CHECK(report.lhs == doctest::Approx(8.25));
    CHECK(report.value_at_optimizer == doctest::Approx(8.25));
  }
  SUBCASE("point-mass mixture reduces to the single-scenario equality") {
    const auto report = law_invariant_composed_check(
        CombinationSpec::mixture(IndexWeight({1.0, 0.0})),
        RiskMeasureSpec::expected_shortfall(0.5), {base, skew}, x, grid);
    CHECK(report.passed);
    CHECK(report.lhs == doctest::Approx(7.5));
  }
  SUBCASE("worst case asserts only the bound and reports the gap") {
    const auto report = law_invariant_composed_check(
        CombinationSpec::worst_case(),
        RiskMeasureSpec::expected_shortfall(0.5), {base, skew}, x, grid);
    CHECK(report.passed);
    CHECK(report.lhs == doctest::Approx(9.0));
    CHECK(report.sweep_max >= report.lhs - 1e-10);
    CHECK(report.gap >= 0.0);
  }
  SUBCASE("unsupported inputs") {
    CHECK_THROWS_AS(
        law_invariant_composed_check(
            CombinationSpec::worst_case(), RiskMeasureSpec::value_at_risk(0.5),
            {base, skew}, x, grid),
        UnsupportedError);
    CHECK_THROWS_AS(law_invariant_composed_check(
                        CombinationSpec::utility_of_profile(
                            RiskMeasureSpec::expected_loss(),
                            IndexWeight({0.5, 0.5})),
                        RiskMeasureSpec::expected_shortfall(0.5), {base, skew},
                        x, grid),
                    UnsupportedError);
  }
}

TEST_CASE("law-invariant composed check on random mixtures") {
  Rng rng(59);
  auto space = FiniteProbSpace::uniform(5);
  const auto base = ScenarioMeasure::base(space);
  const std::vector<double> grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  for (int t = 0; t < 40; ++t) {
    const ScenarioMeasure q2(space, rng.simplex(5));
    const Position x(space, rng.vector(5, -10.0, 10.0));
    const auto weights = rng.simplex(2);
    for (const auto& spec :
         {RiskMeasureSpec::expected_shortfall(0.35),
          RiskMeasureSpec::es_mixture(
              EsMixtureMeasure::from_doubles({{0.25, 0.5}, {0.75, 0.5}}))}) {
      const auto report = law_invariant_composed_check(
          CombinationSpec::mixture(IndexWeight(weights)), spec, {base, q2}, x,
          grid);
      CHECK(report.passed);
    }
  }
}

TEST_CASE("beta penalty decomposition") {
  const auto m1 = EsMixtureMeasure::dirac(Rational(1, 2));
  const auto m2 = EsMixtureMeasure::dirac(Rational(1, 4));
  const IndexWeight half({0.5, 0.5});
  const auto mixed = EsMixtureMeasure(
      {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(1, 2)}});

  CHECK(beta_penalty({m1, m2}, half, mixed) == 0.0);
  CHECK(std::isinf(beta_penalty({m1, m2}, half, m1)));
  CHECK(beta_penalty({m1, m2}, IndexWeight({1.0, 0.0}), m1) == 0.0);
}

TEST_CASE("mixing scenarios dominates mixing values, with equality for EL") {
  Rng rng(61);
  auto space = FiniteProbSpace::uniform(5);
  const auto base = ScenarioMeasure::base(space);
  for (int t = 0; t < 100; ++t) {
    const ScenarioMeasure q2(space, rng.simplex(5));
    const Position x(space, rng.vector(5, -10.0, 10.0));
    const auto weights = rng.simplex(2);

    const auto el = mixed_scenario_gap(RiskMeasureSpec::expected_loss(),
                                       {base, q2}, weights, x);
    CHECK(std::abs(el.gap) <= 1e-10);

    for (const auto& spec :
         {RiskMeasureSpec::expected_shortfall(0.4), RiskMeasureSpec::max_loss(),
          RiskMeasureSpec::es_mixture(
              EsMixtureMeasure::from_doubles({{0.3, 1.0}}))}) {
      const auto report = mixed_scenario_gap(spec, {base, q2}, weights, x);
      CHECK(report.gap >= -1e-10);
    }
  }
}
