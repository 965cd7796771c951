// SPDX-License-Identifier: Apache-2.0
//
// irsmux - placement and resource allocation for multi-IRS aided MIMO links
// Copyright (C) 2026 The irsmux Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "irsmux/analysis.hpp"
#include "irsmux/errors.hpp"
#include "irsmux/pipeline.hpp"

using namespace irsmux;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("effective_rank closed cases", "[analysis]") {
  CHECK(effective_rank(std::vector<double>{1, 1, 1, 1}) == 4.0);
  CHECK(effective_rank(std::vector<double>{1, 0, 0}) == 1.0);
  // weights (2/3, 1/3)
  const double h = -(2.0 / 3) * std::log(2.0 / 3) - (1.0 / 3) * std::log(1.0 / 3);
  CHECK_THAT(effective_rank(std::vector<double>{4, 1}), WithinAbs(std::exp(h), 1e-14));
  CHECK_THAT(effective_rank(std::vector<double>{4, 1}), WithinAbs(1.88988, 1e-4));
  CHECK_THROWS_AS(effective_rank(std::vector<double>{0, 0}), DomainError);
  CHECK_THROWS_AS(effective_rank(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(effective_rank(std::vector<double>{1, -1}), DomainError);
}

TEST_CASE("effective_rank bounds and scale invariance", "[analysis]") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> s(6);
    int positive = 0;
    for (double& x : s) {
      x = u(rng) < 0.2 ? 0.0 : u(rng);
      positive += x > 0;
    }
    if (positive == 0) continue;
    const double e = effective_rank(s);
    CHECK(e >= 1.0 - 1e-12);
    CHECK(e <= positive + 1e-12);
    std::vector<double> scaled = s;
    for (double& x : scaled) x *= 37.5;
    CHECK_THAT(effective_rank(scaled), WithinRel(e, 1e-12));
  }
}

TEST_CASE("slope_per_doubling", "[analysis]") {
  CHECK_THAT(slope_per_doubling(std::vector<double>{1, 2, 4}, std::vector<double>{5, 7, 9}),
             WithinAbs(2.0, 1e-14));
  CHECK_THROWS_AS(slope_per_doubling(std::vector<double>{1}, std::vector<double>{1}), DomainError);
  CHECK_THROWS_AS(slope_per_doubling(std::vector<double>{2, 1}, std::vector<double>{1, 2}),
                  DomainError);
  CHECK_THROWS_AS(slope_per_doubling(std::vector<double>{0, 1}, std::vector<double>{1, 2}),
                  DomainError);
}

TEST_CASE("double_irs_threshold closed cases", "[analysis]") {
  const ThresholdResult at = double_irs_threshold(3.0, 1.0, 4.0);
  CHECK_THAT(at.r1, WithinAbs(5.614709844115208, 1e-12));
  CHECK_THAT(at.r2, WithinAbs(at.r1, 1e-12));
  CHECK(at.double_wins);

  const ThresholdResult ten = double_irs_threshold(10.0, 1.0, 1.0);
  CHECK_THAT(ten.r1, WithinAbs(3.45943, 1e-5));
  CHECK_THAT(ten.r2, WithinAbs(2.33985, 1e-5));
  CHECK_FALSE(ten.double_wins);

  const ThresholdResult hundred = double_irs_threshold(1.0, 4.0, 5.0);
  CHECK_THAT(hundred.r1, WithinAbs(6.65821, 1e-5));
  CHECK_THAT(hundred.r2, WithinAbs(7.50978, 1e-5));
  CHECK(hundred.double_wins);

  CHECK_THROWS_AS(double_irs_threshold(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(double_irs_threshold(1.0, -1.0, 1.0), DomainError);
}

TEST_CASE("threshold sign follows chi P M^2 - 48", "[analysis]") {
  for (int i = 0; i < 200; ++i) {
    const double x = std::pow(10.0, -1.0 + 5.0 * i / 199.0);
    const ThresholdResult r = double_irs_threshold(x, 1.0, 1.0);
    if (std::abs(r.r2 - r.r1) <= 1e-9) continue;
    CHECK((r.r2 > r.r1) == (x > 48.0));
    CHECK(r.double_wins == (x >= 48.0));
  }
}

TEST_CASE("scaling slopes approach their asymptotes", "[analysis]") {
  SystemConfig cfg;
  cfg.num_surfaces = 1;
  const ScalingReport m1 = scaling_slope(cfg, SweepVariable::elements,
                                         std::vector<double>{4096, 8192, 16384}, Strategy::single_irs);
  CHECK(m1.theoretical_slope == 2.0);
  CHECK_THAT(m1.fitted_slope, WithinRel(2.0, 0.03));

  cfg.num_surfaces = 2;
  const ScalingReport m2 = scaling_slope(cfg, SweepVariable::elements,
                                         std::vector<double>{4096, 8192}, Strategy::multi_equal);
  CHECK(m2.theoretical_slope == 4.0);
  CHECK_THAT(m2.fitted_slope, WithinRel(4.0, 0.03));

  cfg.num_surfaces = 4;
  const ScalingReport p4 = scaling_slope(cfg, SweepVariable::power,
                                         std::vector<double>{1024, 2048, 4096}, Strategy::multi_sca);
  CHECK(p4.theoretical_slope == 4.0);
  CHECK_THAT(p4.fitted_slope, WithinRel(4.0, 0.03));

  CHECK_THROWS_AS(scaling_slope(cfg, SweepVariable::power, std::vector<double>{1.0},
                                Strategy::multi_equal),
                  DomainError);
}

TEST_CASE("elements slope error shrinks as the window moves up", "[analysis]") {
  SystemConfig cfg;
  cfg.num_surfaces = 4;
  double previous = 1e9;
  for (double base : {256.0, 2048.0, 16384.0}) {
    const ScalingReport r = scaling_slope(cfg, SweepVariable::elements,
                                          std::vector<double>{base, 2 * base, 4 * base},
                                          Strategy::multi_equal);
    const double err = std::abs(r.fitted_slope - r.theoretical_slope);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("analytical checks pass on the default scenario", "[analysis]") {
  const std::vector<CheckOutcome> checks = run_proposition_checks(SystemConfig{});
  CHECK(checks.size() == 8);
  for (const CheckOutcome& c : checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
  }
}

TEST_CASE("evaluate_scenario strategies", "[pipeline]") {
  SystemConfig cfg;
  const ScenarioOutcome single = evaluate_scenario(cfg, Strategy::single_irs, 4);
  REQUIRE(single.placement.surfaces.size() == 1);
  CHECK(single.allocation.elements == std::vector<long>{2400});
  CHECK_THAT(single.allocation.se,
             WithinRel(std::log2(1 + single.chi.chi[0] * cfg.power_budget * 2400.0 * 2400.0), 1e-12));
  CHECK_THAT(single.erank, WithinAbs(1.0, 1e-12));

  const ScenarioOutcome equal = evaluate_scenario(cfg, Strategy::multi_equal, 4);
  CHECK(equal.allocation.elements == std::vector<long>{600, 600, 600, 600});
  CHECK(equal.singular_values.size() == 4);
  CHECK(equal.erank > 1.0);

  const ScenarioOutcome sca = evaluate_scenario(cfg, Strategy::multi_sca, 4);
  CHECK(sca.allocation.se >= equal.allocation.se);
  CHECK(sca.allocation.se >= single.allocation.se - 1e-9);

  SystemConfig none = cfg;
  none.element_budget = 0;
  const ScenarioOutcome empty = evaluate_scenario(none, Strategy::multi_sca, 2);
  CHECK(empty.allocation.se == 0.0);
  CHECK(empty.erank == 0.0);

  CHECK_THROWS_AS(evaluate_scenario(cfg, Strategy::multi_sca, 5), DomainError);
  CHECK(strategy_from_string(to_string(Strategy::multi_equal)) == Strategy::multi_equal);
  CHECK_THROWS_AS(strategy_from_string("both"), DomainError);
}
