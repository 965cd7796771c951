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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "irsmux/beamforming.hpp"
#include "irsmux/config.hpp"
#include "irsmux/placement.hpp"
#include "irsmux/steering.hpp"

namespace irsmux {

// Free-space LoS hop gain: sqrt(beta0) / d * exp(-j 2 pi d / lambda).
std::complex<double> path_gain(double distance, const SystemConfig& config);

struct LinkAngles {
  double array_phase = 0.0;      // Tx AoD or Rx AoA phase argument
  double surface_phase_v = 0.0;  // IRS-side vertical phase argument
  double surface_phase_h = 0.0;  // IRS-side horizontal phase argument
};

// Rank-one LoS hop. For the Tx hop the matrix is M x N_t, for the Rx hop N_r x M.
struct LinkChannel {
  Eigen::MatrixXcd matrix;
  std::complex<double> complex_gain;
  LinkAngles angles;
  SteeringVector array_steering;
  SteeringVector surface_steering;
};

struct LinkPair {
  LinkChannel tx_link;  // T_k
  LinkChannel rx_link;  // R_k
};

// IRS-side (incoming, outgoing) steering vectors for a surface with the given panel shape.
std::pair<SteeringVector, SteeringVector> surface_steering(const PlacedSurface& surface,
                                                           int panel_rows, int panel_cols,
                                                           const SystemConfig& config);

std::vector<LinkPair> build_link_channels(const PlacementResult& placement,
                                          const std::vector<IrsPanel>& panels,
                                          const SystemConfig& config);

// Panels of the requested sizes with optimal phases for the given placement.
std::vector<IrsPanel> configure_panels(const PlacementResult& placement,
                                       const std::vector<long>& element_counts,
                                       const SystemConfig& config);

struct CompositeChannel {
  Eigen::MatrixXcd matrix;      // H, N_r x N_t
  Eigen::MatrixXcd a_t_matrix;  // N_t x K
  Eigen::MatrixXcd a_r_matrix;  // N_r x K
  std::vector<double> sigma_diag;
  std::vector<std::complex<double>> coupling;  // f(Phi_k)
};

// H = sum_k R_k Phi_k T_k, plus the factorisation A_R Sigma A_T^H.
CompositeChannel compose_effective_channel(const std::vector<LinkPair>& links,
                                           const std::vector<IrsPanel>& panels);

// Singular values of a complex matrix in descending order.
std::vector<double> singular_values(const Eigen::MatrixXcd& matrix);

}  // namespace irsmux
