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

#include <benchmark/benchmark.h>

#include <random>

#include "irsmux/allocation.hpp"
#include "irsmux/channel_model.hpp"
#include "irsmux/pipeline.hpp"

namespace {

using namespace irsmux;

void BM_EnumerateAndGreedy(benchmark::State& state) {
  SystemConfig cfg;
  cfg.n_tx = static_cast<int>(state.range(0));
  cfg.n_rx = static_cast<int>(state.range(0)) / 2;
  cfg.num_surfaces = 4;
  for (auto _ : state) {
    const auto cands = enumerate_candidates(cfg);
    benchmark::DoNotOptimize(greedy_select(cands, cfg.num_surfaces));
  }
}
BENCHMARK(BM_EnumerateAndGreedy)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_WaterFilling(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  std::vector<double> eta(static_cast<std::size_t>(state.range(0)));
  for (double& e : eta) e = u(rng);
  for (auto _ : state) benchmark::DoNotOptimize(water_filling(eta, 1.0));
}
BENCHMARK(BM_WaterFilling)->RangeMultiplier(4)->Range(4, 256);

void BM_ScaOptimize(benchmark::State& state) {
  SystemConfig cfg;
  cfg.element_budget = state.range(0);
  const ChannelQuality chi =
      channel_quality(greedy_select(enumerate_candidates(cfg), cfg.num_surfaces), cfg.noise_power);
  AllocationSolution last;
  for (auto _ : state) {
    last = sca_optimize(chi, cfg);
    benchmark::DoNotOptimize(last.se);
  }
  state.counters["sca_iters"] = last.total_iterations;
  state.counters["newton_iters"] = last.newton_iterations;
}
BENCHMARK(BM_ScaOptimize)->Arg(64)->Arg(600)->Arg(2400)->Arg(16384)->Unit(benchmark::kMicrosecond);

void BM_ComposeChannel(benchmark::State& state) {
  SystemConfig cfg;
  const PlacementResult p = greedy_select(enumerate_candidates(cfg), 4);
  const std::vector<long> counts(4, state.range(0));
  for (auto _ : state) {
    const std::vector<IrsPanel> panels = configure_panels(p, counts, cfg);
    const CompositeChannel h = compose_effective_channel(build_link_channels(p, panels, cfg), panels);
    benchmark::DoNotOptimize(singular_values(h.matrix));
  }
}
BENCHMARK(BM_ComposeChannel)->Arg(64)->Arg(600)->Arg(4096)->Unit(benchmark::kMicrosecond);

void BM_EvaluateScenario(benchmark::State& state) {
  SystemConfig cfg;
  const auto strategy = static_cast<Strategy>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_scenario(cfg, strategy, 4));
  state.SetLabel(std::string(to_string(strategy)));
}
BENCHMARK(BM_EvaluateScenario)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
