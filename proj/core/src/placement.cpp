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

#include "irsmux/placement.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "irsmux/channel_model.hpp"
#include "irsmux/errors.hpp"

namespace irsmux {

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) { return std::hypot(a.x, a.y); }

std::vector<double> dft_grid(int n) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) grid.push_back(2.0 * kPi * i / n - kPi);
  return grid;
}

// In-plane unit directions whose ULA phase argument equals `phase` modulo 2 pi.
std::vector<Vec2> ray_directions(double phase, double spacing, double wavelength, Vec2 axis,
                                 Vec2 front) {
  constexpr double kEdge = 1e-12;
  const double scale = wavelength / (2.0 * kPi * spacing);
  std::vector<Vec2> dirs;
  // grating-lobe aliases: every s = (phase + 2 pi q) * scale inside [-1, 1]
  const int q_max = static_cast<int>(std::ceil(1.0 / (2.0 * kPi * scale))) + 1;
  for (int q = -q_max; q <= q_max; ++q) {
    const double s = (phase + 2.0 * kPi * q) * scale;
    if (std::abs(s) > 1.0 + kEdge) continue;
    if (std::abs(s) >= 1.0 - kEdge) {
      dirs.push_back((s > 0 ? 1.0 : -1.0) * axis);
    } else {
      dirs.push_back(s * axis + std::sqrt(1.0 - s * s) * front);
    }
  }
  return dirs;
}

double distance_3d(Vec2 ground, Vec2 terminal, double height) {
  return std::hypot(norm(ground - terminal), height);
}

}  // namespace

AngleGrids dft_angle_grids(const SystemConfig& config) {
  if (config.n_tx < 1 || config.n_rx < 1)
    throw DomainError("dft_angle_grids: antenna counts must be positive");
  return {dft_grid(config.n_tx), dft_grid(config.n_rx)};
}

std::optional<SurfaceSite> position_from_angles(double aod_phase, double aoa_phase,
                                                const SystemConfig& config) {
  const Vec2 tx = config.tx_pos;
  const Vec2 rx = config.rx_pos;
  const Vec2 link = rx - tx;
  const double length = norm(link);
  if (length <= 0) return std::nullopt;

  const Vec2 axis = (1.0 / norm(config.array_axis)) * config.array_axis;
  Vec2 normal{-axis.y, axis.x};
  if (dot(normal, link) < 0) normal = -1.0 * normal;
  const Vec2 tx_front = normal;
  const Vec2 rx_front = -1.0 * normal;

  const auto tx_dirs =
      ray_directions(aod_phase, config.tx_spacing, config.wavelength, axis, tx_front);
  const auto rx_dirs =
      ray_directions(aoa_phase, config.rx_spacing, config.wavelength, axis, rx_front);

  const double eps = 1e-9 * length;
  const double h = config.irs_height;
  std::optional<SurfaceSite> best;
  for (const Vec2& et : tx_dirs) {
    for (const Vec2& er : rx_dirs) {
      Vec2 position;
      const double den = cross(et, er);
      if (std::abs(den) > 1e-12) {
        const double t = cross(link, er) / den;
        const double r = cross(link, et) / den;
        if (t <= eps || r <= eps) continue;
        position = tx + t * et;
      } else {
        // parallel rays: only the pair facing each other along the link is usable
        const bool on_link = std::abs(cross(et, link)) <= eps && dot(et, link) > 0 &&
                             dot(er, link) < 0;
        if (!on_link) continue;
        const double x = length > 2.0 * h
                             ? 0.5 * (length - std::sqrt(length * length - 4.0 * h * h))
                             : 0.5 * length;
        position = tx + (x / length) * link;
      }
      SurfaceSite site{position, distance_3d(position, tx, h), distance_3d(position, rx, h)};
      if (!best || site.dist_tx * site.dist_rx < best->dist_tx * best->dist_rx) best = site;
    }
  }
  return best;
}

std::vector<CandidateEntry> enumerate_candidates(const SystemConfig& config) {
  const AngleGrids grids = dft_angle_grids(config);
  const double beta0 = config.ref_gain();
  std::vector<CandidateEntry> out;
  for (std::size_t i = 0; i < grids.tx.size(); ++i) {
    for (std::size_t j = 0; j < grids.rx.size(); ++j) {
      const auto site = position_from_angles(grids.tx[i], grids.rx[j], config);
      if (!site) continue;
      CandidateEntry c;
      c.aod_index = static_cast<int>(i);
      c.aoa_index = static_cast<int>(j);
      c.aod_phase = grids.tx[i];
      c.aoa_phase = grids.rx[j];
      c.position = site->position;
      c.dist_tx = site->dist_tx;
      c.dist_rx = site->dist_rx;
      c.rho_tx = path_gain(site->dist_tx, config);
      c.rho_rx = path_gain(site->dist_rx, config);
      c.gain = beta0 / (site->dist_tx * site->dist_rx);
      out.push_back(c);
    }
  }
  return out;
}

PlacementResult greedy_select(const std::vector<CandidateEntry>& candidates, int k) {
  if (k < 1) throw DomainError("greedy_select: k must be >= 1");
  std::vector<int> pool(candidates.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<int>(i);

  PlacementResult result;
  for (int iter = 0; iter < k; ++iter) {
    if (pool.empty()) {
      throw InfeasibleError("greedy_select: candidate pool exhausted at iteration " +
                                std::to_string(iter + 1) + " of " + std::to_string(k),
                            iter + 1);
    }
    int pick = pool.front();
    for (int idx : pool) {
      ++result.pool_evaluations;
      if (candidates[idx].gain > candidates[pick].gain) pick = idx;
    }
    const CandidateEntry& c = candidates[pick];
    PlacedSurface s;
    s.candidate_index = pick;
    s.aod_index = c.aod_index;
    s.aoa_index = c.aoa_index;
    s.aod_phase = c.aod_phase;
    s.aoa_phase = c.aoa_phase;
    s.position = c.position;
    s.rho_tx = c.rho_tx;
    s.rho_rx = c.rho_rx;
    s.rho = c.rho_tx * c.rho_rx;
    s.dist_tx = c.dist_tx;
    s.dist_rx = c.dist_rx;
    result.surfaces.push_back(s);
    result.selection_order.push_back(pick);

    std::erase_if(pool, [&](int idx) {
      return candidates[idx].aod_index == c.aod_index || candidates[idx].aoa_index == c.aoa_index;
    });
  }
  return result;
}

}  // namespace irsmux
