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

#include <numbers>
#include <optional>

namespace irsmux {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Full description of one Tx -> {IRS} -> Rx scenario, SI units throughout.
///
/// Defaults reproduce the reference deployment: 8-antenna Tx at the origin,
/// 4-antenna Rx 85 m away, half-wavelength spacings at 2 GHz (lambda = 0.15 m),
/// surfaces mounted 5 m above the terminals, -80 dBm noise, 30 dBm transmit
/// power and 2400 reflecting elements in total.
struct SystemConfig {
  int n_tx = 8;
  int n_rx = 4;
  double wavelength = 0.15;
  double tx_spacing = 0.075;
  double rx_spacing = 0.075;
  double irs_spacing = 0.075;
  Vec2 tx_pos{0.0, 0.0};
  Vec2 rx_pos{85.0, 0.0};
  // Direction along which both terminal ULAs are laid out.
  Vec2 array_axis{0.0, -1.0};
  double irs_height = 5.0;
  double noise_power = 1e-11;
  double power_budget = 1.0;
  long element_budget = 2400;
  int num_surfaces = 4;
  // Reference power gain at 1 m; free-space (lambda / 4 pi)^2 when unset.
  std::optional<double> pathloss_ref_gain;

  double ref_gain() const {
    if (pathloss_ref_gain) return *pathloss_ref_gain;
    const double a = wavelength / (4.0 * std::numbers::pi);
    return a * a;
  }
};

// Throws DomainError when an invariant of SystemConfig is violated.
void validate(const SystemConfig& config);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace irsmux
