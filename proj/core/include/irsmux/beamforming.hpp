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

#include <complex>
#include <vector>

#include "irsmux/steering.hpp"

namespace irsmux {

struct IrsPanel {
  long element_count = 0;
  int panel_rows = 0;  // M_v
  int panel_cols = 0;  // M_h
  std::vector<double> phases;  // [0, 2 pi), one per element
};

// Closest-to-square panel for m elements with all-zero phases. m = 0 gives an
// empty 0x0 panel.
IrsPanel make_panel(long element_count);

// f = sum_m conj(out[m]) e^{j phase[m]} in[m].
std::complex<double> coupling_factor(const IrsPanel& panel, const SteeringVector& steer_in,
                                     const SteeringVector& steer_out);

// Per-element phases that co-phase the cascade so that |f| = M.
std::vector<double> optimal_phases(const SteeringVector& steer_in,
                                   const SteeringVector& steer_out);

// Maps any angle to [0, 2 pi).
double wrap_phase(double phase);

}  // namespace irsmux
