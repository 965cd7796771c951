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

#include "irsmux/config.hpp"

#include <cmath>
#include <string>

#include "irsmux/errors.hpp"

namespace irsmux {

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("SystemConfig: " + what);
}
}  // namespace

void validate(const SystemConfig& c) {
  require(c.n_tx >= 1, "n_tx must be positive");
  require(c.n_rx >= 1, "n_rx must be positive");
  require(c.num_surfaces >= 1, "num_surfaces must be positive");
  require(c.num_surfaces <= c.n_tx && c.num_surfaces <= c.n_rx,
          "num_surfaces must not exceed min(n_tx, n_rx)");
  require(c.wavelength > 0 && c.tx_spacing > 0 && c.rx_spacing > 0 && c.irs_spacing > 0,
          "wavelength and spacings must be positive");
  require(c.irs_height > 0, "irs_height must be positive");
  require(c.noise_power > 0, "noise_power must be positive");
  require(c.power_budget > 0, "power_budget must be positive");
  require(c.element_budget >= 0, "element_budget must be non-negative");
  require(std::hypot(c.array_axis.x, c.array_axis.y) > 0, "array_axis must be non-zero");
  require(!(c.tx_pos == c.rx_pos), "tx_pos and rx_pos must differ");
  require(c.ref_gain() > 0, "pathloss_ref_gain must be positive");
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

}  // namespace irsmux
