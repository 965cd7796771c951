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

#pragma once

#include <string_view>
#include <vector>

#include "irsmux/allocation.hpp"
#include "irsmux/config.hpp"
#include "irsmux/placement.hpp"

namespace irsmux {

enum class Strategy { single_irs, multi_sca, multi_equal };

std::string_view to_string(Strategy strategy);
// Throws DomainError on an unknown name.
Strategy strategy_from_string(std::string_view name);

struct ScenarioOutcome {
  PlacementResult placement;
  ChannelQuality chi;
  AllocationSolution allocation;
  std::vector<double> singular_values;  // of the composed channel, descending
  double erank = 0.0;
};

/// placement -> beamforming -> allocation -> metrics for one scenario.
/// single_irs ignores num_surfaces and uses the best candidate with the full
/// budgets; the other strategies place num_surfaces surfaces.
ScenarioOutcome evaluate_scenario(const SystemConfig& config, Strategy strategy,
                                  int num_surfaces);

}  // namespace irsmux
