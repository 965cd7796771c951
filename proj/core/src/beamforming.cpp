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

#include "irsmux/beamforming.hpp"

#include <cmath>
#include <numbers>

#include "irsmux/errors.hpp"

namespace irsmux {

double wrap_phase(double phase) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phase, two_pi);
  if (r < 0) r += two_pi;
  // fmod of a tiny negative value can round up to exactly 2 pi
  if (r >= two_pi) r = 0.0;
  return r;
}

IrsPanel make_panel(long element_count) {
  if (element_count < 0) throw DomainError("make_panel: negative element count");
  IrsPanel panel;
  panel.element_count = element_count;
  if (element_count == 0) return panel;
  long rows = static_cast<long>(std::sqrt(static_cast<double>(element_count)));
  while (rows * rows > element_count) --rows;
  while (element_count % rows != 0) --rows;
  panel.panel_rows = static_cast<int>(rows);
  panel.panel_cols = static_cast<int>(element_count / rows);
  panel.phases.assign(static_cast<std::size_t>(element_count), 0.0);
  return panel;
}

std::complex<double> coupling_factor(const IrsPanel& panel, const SteeringVector& steer_in,
                                     const SteeringVector& steer_out) {
  const std::size_t m = panel.phases.size();
  if (steer_in.size() != m || steer_out.size() != m)
    throw DomainError("coupling_factor: steering vector length does not match the panel");
  std::complex<double> f{0.0, 0.0};
  for (std::size_t i = 0; i < m; ++i)
    f += std::conj(steer_out[i]) * std::polar(1.0, panel.phases[i]) * steer_in[i];
  return f;
}

std::vector<double> optimal_phases(const SteeringVector& steer_in,
                                   const SteeringVector& steer_out) {
  if (steer_in.size() != steer_out.size())
    throw DomainError("optimal_phases: steering vectors differ in length");
  std::vector<double> phases(steer_in.size());
  for (std::size_t i = 0; i < phases.size(); ++i)
    phases[i] = wrap_phase(std::arg(steer_out[i] * std::conj(steer_in[i])));
  return phases;
}

}  // namespace irsmux
