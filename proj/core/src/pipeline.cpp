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

#include "irsmux/pipeline.hpp"

#include <algorithm>
#include <string>

#include "irsmux/analysis.hpp"
#include "irsmux/channel_model.hpp"
#include "irsmux/errors.hpp"

namespace irsmux {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::single_irs:
      return "single_irs";
    case Strategy::multi_sca:
      return "multi_sca";
    case Strategy::multi_equal:
      return "multi_equal";
  }
  return "unknown";
}

Strategy strategy_from_string(std::string_view name) {
  if (name == "single_irs") return Strategy::single_irs;
  if (name == "multi_sca") return Strategy::multi_sca;
  if (name == "multi_equal") return Strategy::multi_equal;
  throw DomainError("unknown strategy '" + std::string(name) + "'");
}

ScenarioOutcome evaluate_scenario(const SystemConfig& config, Strategy strategy,
                                  int num_surfaces) {
  SystemConfig cfg = config;
  cfg.num_surfaces = strategy == Strategy::single_irs ? 1 : num_surfaces;
  validate(cfg);

  ScenarioOutcome out;
  out.placement = greedy_select(enumerate_candidates(cfg), cfg.num_surfaces);
  out.chi = channel_quality(out.placement, cfg.noise_power);

  switch (strategy) {
    case Strategy::single_irs: {
      AllocationSolution& a = out.allocation;
      a.elements = {cfg.element_budget};
      a.powers = {cfg.power_budget};
      a.se = spectral_efficiency(std::span<const long>(a.elements), a.powers, out.chi.chi);
      a.relaxed_elements = {static_cast<double>(cfg.element_budget)};
      a.relaxed_powers = a.powers;
      a.relaxed_se = a.se;
      a.trace = {a.se};
      break;
    }
    case Strategy::multi_equal:
      out.allocation = equal_allocation(cfg, out.chi);
      break;
    case Strategy::multi_sca:
      out.allocation = sca_optimize(out.chi, cfg);
      break;
  }

  // Channel metrics over the surfaces that actually received elements.
  PlacementResult used;
  std::vector<long> counts;
  for (std::size_t k = 0; k < out.placement.surfaces.size(); ++k) {
    if (out.allocation.elements[k] < 1) continue;
    used.surfaces.push_back(out.placement.surfaces[k]);
    counts.push_back(out.allocation.elements[k]);
  }
  if (used.surfaces.empty()) return out;

  const std::vector<IrsPanel> panels = configure_panels(used, counts, cfg);
  const CompositeChannel h =
      compose_effective_channel(build_link_channels(used, panels, cfg), panels);
  out.singular_values = singular_values(h.matrix);
  // drop numerical-noise singular values so the rank metric sees exact zeros
  const double cut = out.singular_values.front() * 1e-10;
  for (double& s : out.singular_values)
    if (s <= cut) s = 0.0;
  if (out.singular_values.front() > 0) out.erank = effective_rank(out.singular_values);
  return out;
}

}  // namespace irsmux
