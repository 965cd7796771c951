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

#include <optional>
#include <span>
#include <vector>

#include "irsmux/config.hpp"
#include "irsmux/placement.hpp"

namespace irsmux {

// chi_k = |rho_k|^2 / sigma^2, one entry per surface.
struct ChannelQuality {
  std::vector<double> chi;

  std::size_t size() const noexcept { return chi.size(); }
};

ChannelQuality channel_quality(const PlacementResult& placement, double noise_power);

struct AllocationSolution {
  std::vector<long> elements;
  std::vector<double> powers;
  double se = 0.0;                       // bits/s/Hz at (elements, powers)
  std::vector<double> trace;             // relaxed SE per outer SCA iterate
  std::vector<double> relaxed_elements;  // before rounding
  std::vector<double> relaxed_powers;
  double relaxed_se = 0.0;
  int iterations = 0;        // outer SCA iterations of the returned run
  int total_iterations = 0;  // outer iterations summed over all starts
  int newton_iterations = 0;
};

struct WaterFilling {
  std::vector<double> powers;
  double water_level = 0.0;
};

// p_k = max(u - 1/eta_k, 0) with sum p_k = power_budget. Non-positive eta get no power.
WaterFilling water_filling(std::span<const double> eta, double power_budget);

double spectral_efficiency(std::span<const long> elements, std::span<const double> powers,
                           std::span<const double> chi);

// Relaxed (continuous element count) form of the same expression.
double spectral_efficiency(std::span<const double> elements, std::span<const double> powers,
                           std::span<const double> chi);

// M split as evenly as possible (first M mod K surfaces get one more), P/K each.
AllocationSolution equal_allocation(const SystemConfig& config, const ChannelQuality& chi);

// Largest-remainder rounding; ties go to the lower index.
std::vector<long> round_elements(std::span<const double> m_tilde, long budget);

// SCA local point for the convexified subproblem.
struct ScaState {
  std::vector<double> x_hat;  // ln p
  std::vector<double> y_hat;  // ln M~^2
  std::vector<double> m_hat;  // M~, > 0
  std::vector<double> l;      // auxiliary SNR values at the local point
};

// Local point from an iterate; entries at or below 1e-9 are clamped.
ScaState make_sca_state(std::span<const double> powers, std::span<const double> elements,
                        std::span<const double> chi);

struct SubproblemResult {
  std::vector<double> p;
  std::vector<double> m_tilde;
  std::vector<double> l;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<bool> frozen;  // surfaces held at zero
  double objective = 0.0;    // sum log2(1 + l_k)
  double kkt_residual = 0.0;
  double newton_decrement = 0.0;  // lambda^2 / 2 at exit, an optimality gap estimate
  double max_residual = 0.0;      // worst relative constraint violation
  int newton_iterations = 0;
};

struct SubproblemOptions {
  double gap_tolerance = 1e-12;
  int max_newton_iterations = 200;
};

/// Solves the convexified joint power / element subproblem around a local point.
///
/// The auxiliary constraints are tight at any optimum, so the program is solved
/// over (p, M~) by equality-constrained damped Newton and l, x, y are recovered
/// in closed form. Surfaces with a clamped local point are frozen at zero.
SubproblemResult convex_subproblem(const ChannelQuality& chi, const SystemConfig& config,
                                   const ScaState& state, const SubproblemOptions& options = {});

struct ScaOptions {
  double relative_tolerance = 1e-10;
  int max_iterations = 500;
  // Run one start per top-n support (n = 1..K) when no init is given.
  bool multi_start = true;
  SubproblemOptions subproblem;
};

/// Joint element / power allocation by successive convex approximation,
/// followed by largest-remainder rounding and water-filling on the integers.
AllocationSolution sca_optimize(const ChannelQuality& chi, const SystemConfig& config,
                                const std::optional<AllocationSolution>& init = std::nullopt,
                                const ScaOptions& options = {});

// Exact integer optimum by enumerating every split with sum <= M. Throws
// SizeError when the number of splits exceeds max_splits.
AllocationSolution brute_force_oracle(const ChannelQuality& chi, const SystemConfig& config,
                                      double max_splits = 1e7);

}  // namespace irsmux
