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

#include <span>
#include <string>
#include <vector>

#include "irsmux/config.hpp"
#include "irsmux/pipeline.hpp"

namespace irsmux {

// exp of the entropy of sqrt(delta_k) / sum_i sqrt(delta_i); zeros are dropped.
double effective_rank(std::span<const double> singular_values);

enum class SweepVariable { elements, power };

struct ScalingReport {
  SweepVariable variable = SweepVariable::elements;
  std::vector<double> values;
  std::vector<double> se;
  double fitted_slope = 0.0;       // bits per doubling, least squares
  double theoretical_slope = 0.0;  // 2K for elements, K for power
};

// Least-squares slope of ys against log2(xs).
double slope_per_doubling(std::span<const double> xs, std::span<const double> ys);

ScalingReport scaling_slope(const SystemConfig& config, SweepVariable variable,
                            std::span<const double> values, Strategy strategy);

struct ThresholdResult {
  double r1 = 0.0;  // one surface with all M elements
  double r2 = 0.0;  // two surfaces with M/2 each, equal chi
  bool double_wins = false;
};

ThresholdResult double_irs_threshold(double chi, double power, double elements);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Closed-form and asymptotic checks of the four analytical results on the given scenario.
std::vector<CheckOutcome> run_proposition_checks(const SystemConfig& config);

}  // namespace irsmux
