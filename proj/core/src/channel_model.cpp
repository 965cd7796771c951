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

#include "irsmux/channel_model.hpp"

#include <cmath>
#include <numbers>

#include "irsmux/errors.hpp"

namespace irsmux {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd as_eigen(const SteeringVector& v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

struct SurfacePhases {
  double v = 0.0;
  double h = 0.0;
};

// Panel axes: vertical (z) and horizontal along x.
SurfacePhases surface_phases(Vec2 surface, double height, Vec2 terminal,
                             const SystemConfig& config) {
  const double dx = terminal.x - surface.x;
  const double dy = terminal.y - surface.y;
  const double dz = -height;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  const double k = 2.0 * kPi * config.irs_spacing / config.wavelength;
  return {k * dz / d, k * dx / d};
}

}  // namespace

std::complex<double> path_gain(double distance, const SystemConfig& config) {
  if (!(distance > 0)) throw DomainError("path_gain: distance must be positive");
  return std::polar(std::sqrt(config.ref_gain()) / distance,
                    -2.0 * kPi * distance / config.wavelength);
}

std::pair<SteeringVector, SteeringVector> surface_steering(const PlacedSurface& surface,
                                                           int panel_rows, int panel_cols,
                                                           const SystemConfig& config) {
  const SurfacePhases in =
      surface_phases(surface.position, config.irs_height, config.tx_pos, config);
  const SurfacePhases out =
      surface_phases(surface.position, config.irs_height, config.rx_pos, config);
  return {upa_response(panel_rows, panel_cols, in.v, in.h),
          upa_response(panel_rows, panel_cols, out.v, out.h)};
}

std::vector<LinkPair> build_link_channels(const PlacementResult& placement,
                                          const std::vector<IrsPanel>& panels,
                                          const SystemConfig& config) {
  if (panels.size() != placement.surfaces.size())
    throw DomainError("build_link_channels: one panel per placed surface required");

  std::vector<LinkPair> links;
  links.reserve(panels.size());
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const IrsPanel& panel = panels[k];
    const PlacedSurface& surface = placement.surfaces[k];
    if (panel.element_count < 1)
      throw DomainError("build_link_channels: surface " + std::to_string(k) + " has no elements");
    if (static_cast<long>(panel.panel_rows) * panel.panel_cols != panel.element_count)
      throw DomainError("build_link_channels: panel shape does not match its element count");

    auto [steer_in, steer_out] =
        surface_steering(surface, panel.panel_rows, panel.panel_cols, config);
    const SurfacePhases in_ph =
        surface_phases(surface.position, config.irs_height, config.tx_pos, config);
    const SurfacePhases out_ph =
        surface_phases(surface.position, config.irs_height, config.rx_pos, config);

    LinkPair pair;
    SteeringVector a_t = ula_response(config.n_tx, surface.aod_phase);
    SteeringVector a_r = ula_response(config.n_rx, surface.aoa_phase);

    pair.tx_link.complex_gain = surface.rho_tx;
    pair.tx_link.matrix = surface.rho_tx * as_eigen(steer_in) * as_eigen(a_t).adjoint();
    pair.tx_link.angles = {surface.aod_phase, in_ph.v, in_ph.h};
    pair.tx_link.array_steering = std::move(a_t);
    pair.tx_link.surface_steering = std::move(steer_in);

    pair.rx_link.complex_gain = surface.rho_rx;
    pair.rx_link.matrix = surface.rho_rx * as_eigen(a_r) * as_eigen(steer_out).adjoint();
    pair.rx_link.angles = {surface.aoa_phase, out_ph.v, out_ph.h};
    pair.rx_link.array_steering = std::move(a_r);
    pair.rx_link.surface_steering = std::move(steer_out);

    links.push_back(std::move(pair));
  }
  return links;
}

std::vector<IrsPanel> configure_panels(const PlacementResult& placement,
                                       const std::vector<long>& element_counts,
                                       const SystemConfig& config) {
  if (element_counts.size() != placement.surfaces.size())
    throw DomainError("configure_panels: one element count per placed surface required");
  std::vector<IrsPanel> panels;
  panels.reserve(element_counts.size());
  for (std::size_t k = 0; k < element_counts.size(); ++k) {
    IrsPanel panel = make_panel(element_counts[k]);
    if (panel.element_count > 0) {
      auto [in, out] =
          surface_steering(placement.surfaces[k], panel.panel_rows, panel.panel_cols, config);
      panel.phases = optimal_phases(in, out);
    }
    panels.push_back(std::move(panel));
  }
  return panels;
}

CompositeChannel compose_effective_channel(const std::vector<LinkPair>& links,
                                           const std::vector<IrsPanel>& panels) {
  if (links.empty()) throw DomainError("compose_effective_channel: no links");
  if (links.size() != panels.size())
    throw DomainError("compose_effective_channel: links and panels differ in length");

  const Eigen::Index n_tx = links.front().tx_link.matrix.cols();
  const Eigen::Index n_rx = links.front().rx_link.matrix.rows();
  const auto k_count = static_cast<Eigen::Index>(links.size());

  CompositeChannel out;
  out.matrix = Eigen::MatrixXcd::Zero(n_rx, n_tx);
  out.a_t_matrix.resize(n_tx, k_count);
  out.a_r_matrix.resize(n_rx, k_count);

  const double scale = std::sqrt(static_cast<double>(n_tx * n_rx));
  for (Eigen::Index k = 0; k < k_count; ++k) {
    const LinkChannel& t = links[static_cast<std::size_t>(k)].tx_link;
    const LinkChannel& r = links[static_cast<std::size_t>(k)].rx_link;
    const IrsPanel& panel = panels[static_cast<std::size_t>(k)];
    const auto m = static_cast<Eigen::Index>(panel.phases.size());
    if (t.matrix.rows() != m || r.matrix.cols() != m || t.matrix.cols() != n_tx ||
        r.matrix.rows() != n_rx)
      throw DomainError("compose_effective_channel: link shapes do not match panel " +
                        std::to_string(k));

    Eigen::RowVectorXcd reflect(m);
    for (Eigen::Index i = 0; i < m; ++i)
      reflect(i) = std::polar(1.0, panel.phases[static_cast<std::size_t>(i)]);
    out.matrix += (r.matrix.array().rowwise() * reflect.array()).matrix() * t.matrix;

    const std::complex<double> f = coupling_factor(panel, t.surface_steering, r.surface_steering);
    const std::complex<double> weighted = t.complex_gain * r.complex_gain * f;
    out.coupling.push_back(f);
    out.sigma_diag.push_back(scale * std::abs(weighted));

    const std::complex<double> rot = std::polar(1.0, -std::arg(weighted));
    for (Eigen::Index i = 0; i < n_tx; ++i)
      out.a_t_matrix(i, k) = rot * t.array_steering[static_cast<std::size_t>(i)] /
                             std::sqrt(static_cast<double>(n_tx));
    for (Eigen::Index i = 0; i < n_rx; ++i)
      out.a_r_matrix(i, k) =
          r.array_steering[static_cast<std::size_t>(i)] / std::sqrt(static_cast<double>(n_rx));
  }
  return out;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& matrix) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
  const Eigen::VectorXd s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

}  // namespace irsmux
