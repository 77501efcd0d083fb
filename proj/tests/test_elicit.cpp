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

#include "riskcomb/elicit.hpp"

#include <doctest.h>

#include <cmath>

#include "riskcomb/errors.hpp"
#include "riskcomb/rng.hpp"

using namespace riskcomb;

namespace {

const std::vector<double> kX = {-10.0, -5.0, 0.0, 5.0};

SpacePtr uniform4() { return FiniteProbSpace::uniform(4); }

}  // namespace

TEST_CASE("scoring function shape") {
  const auto sq = ScoringFunction::squared_error();
  const auto pin = ScoringFunction::pinball(0.25);
  CHECK(score(sq, 3.0, 3.0) == 0.0);
  CHECK(score(pin, 3.0, 3.0) == 0.0);
  CHECK(score(sq, 1.0, 4.0) == 9.0);
  CHECK(score(pin, 4.0, 1.0) == doctest::Approx(0.25 * 3.0));
  CHECK(score(pin, 1.0, 4.0) == doctest::Approx(0.75 * 3.0));
  CHECK_THROWS_AS(ScoringFunction::pinball(0.0), StructuralError);
  CHECK_THROWS_AS(ScoringFunction::pinball(1.0), StructuralError);

  // One-sided monotonicity in the forecast argument.
  Rng rng(90);
  for (int t = 0; t < 200; ++t) {
    const double x = rng.uniform(-5.0, 5.0);
    const double y1 = x + rng.uniform(0.1, 3.0);
    const double y2 = y1 + rng.uniform(0.1, 3.0);
    for (const auto& s : {sq, pin}) {
      CHECK(score(s, x, y2) > score(s, x, y1));
      CHECK(score(s, x, x - (y2 - x)) > score(s, x, x - (y1 - x)));
      CHECK(score(s, x, y1) > 0.0);
    }
  }
}

TEST_CASE("expected score worked examples") {
  auto space = uniform4();
  const Position x(space, kX);
  const auto base = ScenarioMeasure::base(space);
  CHECK(expected_score(ScoringFunction::squared_error(), x, base, -2.5) ==
        31.25);
  // All payoffs sit above -10, so only the alpha branch contributes.
  CHECK(expected_score(ScoringFunction::pinball(0.25), x, base, -10.0) ==
        doctest::Approx(0.25 * (0.0 + 5.0 + 10.0 + 15.0) / 4.0));
  const Position c(space, {2.0, 2.0, 2.0, 2.0});
  CHECK(expected_score(ScoringFunction::squared_error(), c, base, 2.0) == 0.0);
  CHECK(expected_score(ScoringFunction::pinball(0.4), c, base, 2.0) == 0.0);
}

TEST_CASE("elicit closed forms match the measure evaluations") {
  auto space = uniform4();
  const Position x(space, kX);
  const auto base = ScenarioMeasure::base(space);
  const ScenarioMeasure skew(space, {0.4, 0.3, 0.2, 0.1});

  CHECK(elicit(ScoringFunction::squared_error(), x, skew) == 5.0);
  CHECK(elicit(ScoringFunction::pinball(0.25), x, base) == 10.0);

  const Position c(space, {3.0, 3.0, 3.0, 3.0});
  CHECK(elicit(ScoringFunction::squared_error(), c, base) == -3.0);
  CHECK(elicit(ScoringFunction::pinball(0.25), c, base) == -3.0);

  Rng rng(91);
  for (int t = 0; t < 100; ++t) {
    const Position y(space, rng.vector(4, -10.0, 10.0));
    const ScenarioMeasure q(space, rng.simplex(4));
    CHECK(elicit(ScoringFunction::squared_error(), y, q) ==
          evaluate(RiskMeasureSpec::expected_loss(), y, q));
    const double alpha = rng.uniform(0.05, 0.95);
    CHECK(elicit(ScoringFunction::pinball(alpha), y, q) ==
          evaluate(RiskMeasureSpec::value_at_risk(alpha), y, q));
  }
}

TEST_CASE("worst-case elicitation") {
  auto space = uniform4();
  const Position x(space, kX);
  const auto base = ScenarioMeasure::base(space);
  const ScenarioMeasure skew(space, {0.4, 0.3, 0.2, 0.1});

  SUBCASE("worked squared-error example") {
    const auto report = elicit_worst_case(ScoringFunction::squared_error(), x,
                                          {base, skew});
    CHECK(report.consistent);
    CHECK(report.direct_max == 5.0);
    CHECK(report.value ==
          doctest::Approx(5.0).epsilon(0).scale(1).epsilon(1e-4));
    CHECK(report.argmin == doctest::Approx(-5.0).epsilon(1e-4));
  }
  SUBCASE("singleton scenario set reduces to elicit") {
    const auto report =
        elicit_worst_case(ScoringFunction::squared_error(), x, {skew});
    CHECK(report.consistent);
    CHECK(report.direct_max == 5.0);
    CHECK(std::abs(report.value - 5.0) <= 2.0 * report.resolution);
  }
  SUBCASE("pinball two-scenario agreement") {
    const auto report =
        elicit_worst_case(ScoringFunction::pinball(0.25), x, {base, skew});
    CHECK(report.consistent);
    CHECK(report.direct_max == 10.0);
  }
  SUBCASE("empty scenario set") {
    CHECK_THROWS_AS(
        elicit_worst_case(ScoringFunction::squared_error(), x, {}),
        DomainError);
  }
}

TEST_CASE("worst-case elicitation on window-translate scenario families") {
  // Uniform windows over an arithmetic payoff grid induce distributions
  // that are translates of each other, so every scenario attains the same
  // minimal score and the left-tie argmin of the envelope recovers the
  // worst elicited value exactly.  The sup property holds on this family.
  Rng rng(93);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 6 + rng.index(3);
    auto space = FiniteProbSpace::uniform(n);
    const double a = rng.uniform(-10.0, 0.0);
    const double d = rng.uniform(0.5, 3.0);
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
      values[k] = a + d * static_cast<double>(k);
    }
    const Position x(space, values);

    const std::size_t window = 3 + rng.index(n - 3);
    const std::size_t n_scen = 2 + rng.index(2);
    std::vector<ScenarioMeasure> scenarios;
    for (std::size_t i = 0; i < n_scen; ++i) {
      const std::size_t offset = rng.index(n - window + 1);
      std::vector<double> probs(n, 0.0);
      for (std::size_t k = 0; k < window; ++k) {
        probs[offset + k] = 1.0 / static_cast<double>(window);
      }
      double head = 0.0;
      for (std::size_t k = 0; k + 1 < window; ++k) head += probs[offset + k];
      probs[offset + window - 1] = 1.0 - head;
      scenarios.emplace_back(space, probs);
    }

    for (const auto& s :
         {ScoringFunction::squared_error(), ScoringFunction::pinball(0.3)}) {
      CHECK(worst_case_aligned(s, x, scenarios));
      const auto report = elicit_worst_case(s, x, scenarios);
      CHECK(report.consistent);
      for (const auto& q : scenarios) {
        CHECK(report.value >= elicit(s, x, q) - 2.0 * report.resolution);
      }
    }
  }
}

TEST_CASE("misaligned scenarios trip the consistency diagnostic") {
  // When the scenario with the best attainable score is not the one with
  // the worst elicited value, the envelope argmin drifts away from the
  // per-scenario maximum; the report must say so rather than hide it.
  auto space = FiniteProbSpace::uniform(3);
  const Position x(space, {0.1, -0.1, 1.0});
  const ScenarioMeasure spread(space, {0.5, 0.5, 0.0});  // mean 0, spread out
  const ScenarioMeasure tight(space, {0.0, 0.0, 1.0});   // mean 1, no spread
  CHECK_FALSE(
      worst_case_aligned(ScoringFunction::squared_error(), x, {spread, tight}));
  const auto report =
      elicit_worst_case(ScoringFunction::squared_error(), x, {spread, tight});
  CHECK(report.direct_max == 0.0);
  CHECK(report.value == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK_FALSE(report.consistent);
}

TEST_CASE("widening the search interval never moves the minimizer") {
  // The score is monotone on each side of x, so [min X, max X] contains the
  // argmin; a widened grid must agree.
  Rng rng(95);
  auto space = FiniteProbSpace::uniform(5);
  for (int t = 0; t < 30; ++t) {
    const Position x(space, rng.vector(5, -8.0, 8.0));
    const ScenarioMeasure q(space, rng.simplex(5));
    for (const auto& s :
         {ScoringFunction::squared_error(), ScoringFunction::pinball(0.35)}) {
      const double inside = elicit(s, x, q);
      const double lo = -12.0, hi = 12.0;
      double best_y = lo;
      double best = expected_score(s, x, q, lo);
      for (int c = 1; c <= 4000; ++c) {
        const double y = lo + (hi - lo) * c / 4000.0;
        const double v = expected_score(s, x, q, y);
        if (v < best) {
          best = v;
          best_y = y;
        }
      }
      CHECK(expected_score(s, x, q, -inside) <= best + 1e-9);
      CHECK(std::abs(-inside - best_y) <= 2.0 * (hi - lo) / 4000.0 + 1e-9);
    }
  }
}

TEST_CASE("ES as a reweighted elicited mean") {
  auto space = uniform4();
  const auto base = ScenarioMeasure::base(space);

  SUBCASE("clean level") {
    const Position x(space, kX);
    const auto report = es_conditional_mean_check(0.5, x, base);
    REQUIRE(report.applicable);
    CHECK(report.es_value == 7.5);
    CHECK(report.gap <= 1e-8);
  }
  SUBCASE("tied level is flagged, not asserted") {
    const Position x(space, kX);
    const auto report = es_conditional_mean_check(0.3, x, base);
    CHECK_FALSE(report.applicable);
  }
  SUBCASE("random clean levels agree within 1e-8") {
    Rng rng(97);
    auto space8 = FiniteProbSpace::uniform(8);
    const auto base8 = ScenarioMeasure::base(space8);
    for (int t = 0; t < 50; ++t) {
      const Position x(space8, rng.vector(8, -10.0, 10.0));
      const double alpha = (1.0 + static_cast<double>(rng.index(7))) / 8.0;
      const auto report = es_conditional_mean_check(alpha, x, base8);
      REQUIRE(report.applicable);  // level sits on an atom boundary
      CHECK(report.gap <= 1e-8);
    }
  }
}
