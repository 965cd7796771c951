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
#include <numeric>
#include <random>

#include "irsmux/allocation.hpp"
#include "irsmux/errors.hpp"
#include "oracles.hpp"

using namespace irsmux;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SystemConfig budgets(long m, double p, int k) {
  SystemConfig cfg;
  cfg.element_budget = m;
  cfg.power_budget = p;
  cfg.num_surfaces = k;
  return cfg;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }
long sum(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

// chi values that put chi_k P M^2 inside [lo, hi] on a log scale
std::vector<double> random_chi(std::mt19937_64& rng, int k, double p, long m, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> chi;
  for (int i = 0; i < k; ++i) chi.push_back(std::exp(u(rng)) / (p * double(m) * double(m)));
  return chi;
}

}  // namespace

TEST_CASE("water_filling closed cases", "[allocation]") {
  const WaterFilling sym = water_filling(std::vector<double>{3.0, 3.0}, 2.0);
  CHECK_THAT(sym.powers[0], WithinAbs(1.0, 1e-15));
  CHECK_THAT(sym.powers[1], WithinAbs(1.0, 1e-15));

  const WaterFilling dead = water_filling(std::vector<double>{1.0, 0.0}, 1.0);
  CHECK(dead.powers[0] == 1.0);
  CHECK(dead.powers[1] == 0.0);

  const WaterFilling wf = water_filling(std::vector<double>{2.0, 1.0}, 1.0);
  CHECK_THAT(wf.powers[0], WithinAbs(0.75, 1e-15));
  CHECK_THAT(wf.powers[1], WithinAbs(0.25, 1e-15));
  CHECK_THAT(wf.water_level, WithinAbs(1.25, 1e-15));

  const WaterFilling shut = water_filling(std::vector<double>{10.0, 0.1}, 1.0);
  CHECK(shut.powers[1] == 0.0);
  CHECK_THAT(shut.powers[0], WithinAbs(1.0, 1e-15));

  CHECK_THROWS_AS(water_filling(std::vector<double>{0.0, 0.0}, 1.0), DomainError);
  CHECK_THROWS_AS(water_filling(std::vector<double>{1.0}, 0.0), DomainError);
}

TEST_CASE("water_filling agrees with bisection and satisfies KKT", "[allocation]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> le(-3.0, 3.0);
  std::uniform_int_distribution<int> kd(1, 8);
  for (int t = 0; t < 300; ++t) {
    std::vector<double> eta(std::size_t(kd(rng)));
    for (double& e : eta) e = std::pow(10.0, le(rng));
    const double p = std::pow(10.0, le(rng));
    const WaterFilling wf = water_filling(eta, p);
    double u = 0.0;
    const std::vector<double> ref = oracle::water_filling_bisection(eta, p, &u);
    CHECK_THAT(sum(wf.powers), WithinRel(p, 1e-10));
    CHECK_THAT(wf.water_level, WithinRel(u, 1e-9));
    for (std::size_t k = 0; k < eta.size(); ++k) {
      CHECK_THAT(wf.powers[k], WithinAbs(ref[k], 1e-9 * p));
      if (wf.powers[k] > 0)
        CHECK_THAT(wf.powers[k] + 1.0 / eta[k], WithinRel(wf.water_level, 1e-9));
      else
        CHECK(1.0 / eta[k] >= wf.water_level * (1 - 1e-12));
    }
    // scaling every gain up never deactivates a channel
    std::vector<double> scaled = eta;
    for (double& e : scaled) e *= 3.0;
    const WaterFilling up = water_filling(scaled, p);
    for (std::size_t k = 0; k < eta.size(); ++k)
      if (wf.powers[k] > 0) CHECK(up.powers[k] > 0);
  }
}

TEST_CASE("spectral_efficiency closed cases", "[allocation]") {
  CHECK_THAT(spectral_efficiency(std::vector<long>{1}, std::vector<double>{1.0},
                                 std::vector<double>{1.0}),
             WithinAbs(1.0, 1e-15));
  // chi P M^2 = 48
  CHECK_THAT(spectral_efficiency(std::vector<long>{4}, std::vector<double>{1.0},
                                 std::vector<double>{3.0}),
             WithinAbs(5.614709844115208, 1e-12));
  CHECK_THAT(spectral_efficiency(std::vector<long>{2, 2}, std::vector<double>{0.5, 0.5},
                                 std::vector<double>{3.0, 3.0}),
             WithinAbs(std::log2(49.0), 1e-12));
  CHECK_THROWS_AS(spectral_efficiency(std::vector<long>{1}, std::vector<double>{1.0, 1.0},
                                      std::vector<double>{1.0}),
                  DomainError);
}

TEST_CASE("equal_allocation splits", "[allocation]") {
  const ChannelQuality four{{1e-3, 1e-4, 1e-4, 1e-5}};
  const AllocationSolution a = equal_allocation(budgets(2400, 1.0, 4), four);
  CHECK(a.elements == std::vector<long>{600, 600, 600, 600});
  for (double p : a.powers) CHECK(p == 0.25);

  const AllocationSolution one = equal_allocation(budgets(77, 2.0, 1), ChannelQuality{{0.5}});
  CHECK(one.elements == std::vector<long>{77});
  CHECK(one.powers == std::vector<double>{2.0});

  const ChannelQuality three{{1.0, 1.0, 1.0}};
  const AllocationSolution b = equal_allocation(budgets(10, 1.0, 3), three);
  CHECK(b.elements == std::vector<long>{4, 3, 3});
  CHECK(sum(b.elements) == 10);
  CHECK_THAT(b.se, WithinAbs(oracle::rate(b.elements, b.powers, three.chi), 1e-12));
}

TEST_CASE("round_elements uses largest remainders", "[allocation]") {
  CHECK(round_elements(std::vector<double>{600, 600, 600, 600}, 2400) ==
        std::vector<long>{600, 600, 600, 600});
  // remainders .6, .7, .7: the two .7 entries take the two spare units
  CHECK(round_elements(std::vector<double>{10.6, 9.7, 9.7}, 30) == std::vector<long>{10, 10, 10});
  CHECK(round_elements(std::vector<double>{0.2, 0.2}, 0) == std::vector<long>{0, 0});
  CHECK(round_elements(std::vector<double>{1.5, 1.5}, 3) == std::vector<long>{2, 1});
  CHECK(round_elements(std::vector<double>{2.4, 2.4}, 5) == std::vector<long>{3, 2});

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> w(5);
    for (double& x : w) x = u(rng);
    const double s = sum(w);
    const long budget = 1 + long(u(rng) * 100);
    for (double& x : w) x *= double(budget) / s * (0.9 + 0.1 * u(rng));
    const std::vector<long> r = round_elements(w, budget);
    CHECK(sum(r) <= budget);
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(double(r[k]) >= std::floor(w[k]));
      CHECK(double(r[k]) <= std::floor(w[k]) + 1);
    }
  }
  CHECK_THROWS_AS(round_elements(std::vector<double>{3.0, 3.0}, 5), DomainError);
}

TEST_CASE("channel_quality is |rho|^2 over noise", "[allocation]") {
  PlacementResult p;
  PlacedSurface s;
  s.rho = {3e-6, 4e-6};
  p.surfaces = {s};
  CHECK_THAT(channel_quality(p, 1e-11).chi[0], WithinRel(2.5, 1e-12));
  CHECK_THROWS_AS(channel_quality(p, 0.0), DomainError);
}

TEST_CASE("sca with one surface takes every resource", "[allocation]") {
  const ChannelQuality q{{2e-6}};
  const AllocationSolution s = sca_optimize(q, budgets(500, 1.5, 1));
  CHECK(s.elements == std::vector<long>{500});
  CHECK_THAT(s.powers[0], WithinRel(1.5, 1e-12));
  CHECK_THAT(s.se, WithinRel(std::log2(1 + 2e-6 * 1.5 * 500 * 500), 1e-12));
}

TEST_CASE("sca with equal chi splits evenly at high SNR", "[allocation]") {
  const ChannelQuality q{{1e-2, 1e-2}};
  const AllocationSolution s = sca_optimize(q, budgets(200, 1.0, 2));
  CHECK(s.elements == std::vector<long>{100, 100});
  CHECK_THAT(s.powers[0], WithinRel(0.5, 1e-9));
  CHECK_THAT(s.powers[1], WithinRel(0.5, 1e-9));
}

TEST_CASE("sca invariants and oracle agreement on random instances", "[allocation]") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 15; ++t) {
    const SystemConfig cfg = budgets(30, 1.0, 3);
    const ChannelQuality q{random_chi(rng, 3, cfg.power_budget, cfg.element_budget, 10.0, 1e3)};
    const AllocationSolution s = sca_optimize(q, cfg);
    const AllocationSolution ex = brute_force_oracle(q, cfg);
    CHECK(sum(s.elements) <= cfg.element_budget);
    CHECK(sum(s.powers) <= cfg.power_budget + 1e-9);
    CHECK_THAT(s.se, WithinAbs(oracle::rate(s.elements, s.powers, q.chi), 1e-12));
    for (std::size_t i = 1; i < s.trace.size(); ++i) CHECK(s.trace[i] >= s.trace[i - 1]);
    CHECK(s.relaxed_se >= equal_allocation(cfg, q).se - 1e-9);
    CHECK(s.relaxed_se >= ex.se - 1e-6);
    CHECK(ex.se >= s.se - 1e-12);
    CHECK(s.se >= 0.99 * ex.se);
  }
}

TEST_CASE("sca accepts an explicit starting point", "[allocation]") {
  const ChannelQuality q{{4e-4, 1e-4, 5e-5}};
  const SystemConfig cfg = budgets(300, 1.0, 3);
  const AllocationSolution eq = equal_allocation(cfg, q);
  ScaOptions single;
  single.multi_start = false;
  const AllocationSolution a = sca_optimize(q, cfg, eq);
  const AllocationSolution b = sca_optimize(q, cfg, std::nullopt, single);
  CHECK_THAT(a.relaxed_se, WithinRel(b.relaxed_se, 1e-12));
  CHECK(a.trace.front() == eq.se);

  AllocationSolution bad = eq;
  bad.relaxed_elements.pop_back();
  bad.elements.pop_back();
  bad.relaxed_powers.pop_back();
  CHECK_THROWS_AS(sca_optimize(q, cfg, bad), DomainError);
  CHECK_THROWS_AS(sca_optimize(ChannelQuality{{0.0, 0.0}}, cfg), DomainError);
}

TEST_CASE("brute-force oracle", "[allocation]") {
  const AllocationSolution one = brute_force_oracle(ChannelQuality{{0.3}}, budgets(12, 1.0, 1));
  CHECK(one.elements == std::vector<long>{12});
  CHECK_THAT(one.powers[0], WithinRel(1.0, 1e-15));

  const AllocationSolution sym = brute_force_oracle(ChannelQuality{{1.0, 1.0}}, budgets(40, 1.0, 2));
  CHECK(sym.elements == std::vector<long>{20, 20});

  const AllocationSolution dead = brute_force_oracle(ChannelQuality{{0.2, 0.0}}, budgets(25, 1.0, 2));
  CHECK(dead.elements == std::vector<long>{25, 0});
  CHECK_THAT(dead.powers[0], WithinRel(1.0, 1e-15));
  CHECK(dead.powers[1] == 0.0);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const ChannelQuality q{random_chi(rng, 3, 1.0, 18, 1.0, 1e4)};
    const AllocationSolution ex = brute_force_oracle(q, budgets(18, 1.0, 3));
    std::vector<long> split;
    const double ref = oracle::integer_optimum(q.chi, 18, 1.0, &split);
    CHECK_THAT(ex.se, WithinRel(ref, 1e-12));
  }

  CHECK_THROWS_AS(brute_force_oracle(ChannelQuality{{1, 1, 1, 1}}, budgets(2400, 1.0, 4)),
                  SizeError);
}

TEST_CASE("sca stays well defined across budgets and SNR extremes", "[allocation]") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int solved = 0;
  for (int t = 0; t < 1500; ++t) {
    const int k = 1 + int(rng() % 4);
    const SystemConfig cfg = budgets(long(std::pow(10.0, 4 * u(rng))), std::pow(10.0, -5 + 10 * u(rng)), k);
    ChannelQuality q;
    for (int i = 0; i < k; ++i) q.chi.push_back(u(rng) < 0.1 ? 0.0 : std::pow(10.0, -12 + 12 * u(rng)));
    if (std::all_of(q.chi.begin(), q.chi.end(), [](double c) { return c == 0; })) continue;
    INFO("trial " << t << " K=" << k << " M=" << cfg.element_budget << " P=" << cfg.power_budget);
    AllocationSolution s;
    REQUIRE_NOTHROW(s = sca_optimize(q, cfg));
    CHECK(sum(s.elements) <= cfg.element_budget);
    CHECK(s.relaxed_se >= equal_allocation(cfg, q).se - 1e-9 * std::max(1.0, s.relaxed_se));
    ++solved;
  }
  CHECK(solved > 1000);
}
