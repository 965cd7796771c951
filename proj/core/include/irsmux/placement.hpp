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
#include <optional>
#include <vector>

#include "irsmux/config.hpp"

namespace irsmux {

struct AngleGrids {
  std::vector<double> tx;  // AoD phase arguments at the Tx, ascending
  std::vector<double> rx;  // AoA phase arguments at the Rx, ascending
};

// DFT directions {2 pi i / N - pi : i = 1..N} for both terminal arrays.
AngleGrids dft_angle_grids(const SystemConfig& config);

// Physical surface location realising one (AoD, AoA) phase pair.
struct SurfaceSite {
  Vec2 position;   // ground-plane coordinates; the surface sits irs_height above
  double dist_tx;  // 3D distances
  double dist_rx;
};

/// Maps a pair of terminal phase arguments to a surface location.
///
/// Each phase argument fixes sin(theta) = e.v, where e is the in-plane unit
/// direction from the terminal to the surface and v the array axis. A ULA
/// cannot tell front from back, so the front side (toward the far terminal) is
/// used; endfire arguments (|sin| = 1) use both directions along the axis
/// since phase +pi and -pi give the same response. The two rays are
/// intersected in the plane. Two broadside rays that overlap along the Tx-Rx
/// segment are realised by a surface hovering above that segment, placed where
/// the 3D distance product is smallest (Tx side). When several realisations
/// exist the one with the smallest cascaded path loss wins. Returns nullopt for
/// arguments outside the visible region, parallel rays, or rays that only meet
/// behind a terminal.
std::optional<SurfaceSite> position_from_angles(double aod_phase, double aoa_phase,
                                                const SystemConfig& config);

// One feasible placement: grid point pair plus its geometry and cascaded gain.
struct CandidateEntry {
  int aod_index = 0;  // index into AngleGrids::tx
  int aoa_index = 0;  // index into AngleGrids::rx
  double aod_phase = 0.0;
  double aoa_phase = 0.0;
  double gain = 0.0;  // |rho_tx| * |rho_rx|
  std::complex<double> rho_tx;
  std::complex<double> rho_rx;
  Vec2 position;
  double dist_tx = 0.0;
  double dist_rx = 0.0;
};

// Every grid pair with a valid site, AoD-major order.
std::vector<CandidateEntry> enumerate_candidates(const SystemConfig& config);

struct PlacedSurface {
  int candidate_index = 0;
  int aod_index = 0;
  int aoa_index = 0;
  double aod_phase = 0.0;
  double aoa_phase = 0.0;
  Vec2 position;
  std::complex<double> rho_tx;
  std::complex<double> rho_rx;
  std::complex<double> rho;  // rho_tx * rho_rx
  double dist_tx = 0.0;
  double dist_rx = 0.0;
};

struct PlacementResult {
  std::vector<PlacedSurface> surfaces;  // in selection order
  std::vector<int> selection_order;     // candidate index picked at each iteration
  int pool_evaluations = 0;             // candidate visits across all iterations
};

/// Greedy orthogonal placement: take the strongest remaining candidate, then
/// drop every candidate that shares its AoD or its AoA; repeat k times. Ties go
/// to the lowest candidate index. Throws InfeasibleError if the pool empties
/// first and DomainError for k < 1.
PlacementResult greedy_select(const std::vector<CandidateEntry>& candidates, int k);

}  // namespace irsmux
