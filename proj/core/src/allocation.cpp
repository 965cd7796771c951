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

#include "irsmux/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "irsmux/errors.hpp"

namespace irsmux {

namespace {

const double kLn2 = std::numbers::ln2;

void check_chi(const ChannelQuality& chi, const char* who) {
  if (chi.chi.empty()) throw DomainError(std::string(who) + ": no surfaces");
  bool any = false;
  for (double c : chi.chi) {
    if (!(c >= 0)) throw DomainError(std::string(who) + ": chi must be non-negative");
    any = any || c > 0;
  }
  if (!any) throw DomainError(std::string(who) + ": every chi is zero");
}

struct ScaRun {
  std::vector<double> p;
  std::vector<double> m;
  std::vector<double> trace;
  int iterations = 0;
  int newton = 0;
};

ScaRun run_sca(const ChannelQuality& chi, const SystemConfig& config, std::vector<double> p,
               std::vector<double> m, const ScaOptions& options) {
  ScaRun run;
  double value = spectral_efficiency(std::span<const double>(m), p, chi.chi);
  run.trace.push_back(value);
  for (int it = 0; it < options.max_iterations; ++it) {
    const ScaState state = make_sca_state(p, m, chi.chi);
    const SubproblemResult sub = convex_subproblem(chi, config, state, options.subproblem);
    run.newton += sub.newton_iterations;
    const double next = spectral_efficiency(std::span<const double>(sub.m_tilde), sub.p, chi.chi);
    // the surrogate is a minoriser, so only roundoff can make this go down
    if (next < value) break;
    p = sub.p;
    m = sub.m_tilde;
    run.trace.push_back(next);
    ++run.iterations;
    const bool done = next - value <= options.relative_tolerance * std::abs(value);
    value = next;
    if (done) break;
  }
  run.p = std::move(p);
  run.m = std::move(m);
  return run;
}

}  // namespace

ChannelQuality channel_quality(const PlacementResult& placement, double noise_power) {
  if (!(noise_power > 0)) throw DomainError("channel_quality: noise power must be positive");
  ChannelQuality q;
  for (const PlacedSurface& s : placement.surfaces) q.chi.push_back(std::norm(s.rho) / noise_power);
  return q;
}

WaterFilling water_filling(std::span<const double> eta, double power_budget) {
  if (!(power_budget > 0)) throw DomainError("water_filling: power budget must be positive");
  std::vector<std::size_t> order;
  for (std::size_t k = 0; k < eta.size(); ++k)
    if (eta[k] > 0) order.push_back(k);
  if (order.empty()) throw DomainError("water_filling: no channel with positive gain");
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return eta[a] > eta[b]; });

  WaterFilling out;
  out.powers.assign(eta.size(), 0.0);
  std::vector<double> inv_prefix(order.size() + 1, 0.0);
  for (std::size_t i = 0; i < order.size(); ++i)
    inv_prefix[i + 1] = inv_prefix[i] + 1.0 / eta[order[i]];
  for (std::size_t n = order.size(); n >= 1; --n) {
    const double level = (power_budget + inv_prefix[n]) / static_cast<double>(n);
    if (level - 1.0 / eta[order[n - 1]] >= 0.0 || n == 1) {
      out.water_level = level;
      for (std::size_t i = 0; i < n; ++i)
        out.powers[order[i]] = std::max(0.0, level - 1.0 / eta[order[i]]);
      break;
    }
  }
  return out;
}

double spectral_efficiency(std::span<const double> elements, std::span<const double> powers,
                           std::span<const double> chi) {
  if (elements.size() != chi.size() || powers.size() != chi.size())
    throw DomainError("spectral_efficiency: length mismatch");
  double se = 0.0;
  for (std::size_t k = 0; k < chi.size(); ++k)
    se += std::log1p(powers[k] * chi[k] * elements[k] * elements[k]);
  return se / kLn2;
}

double spectral_efficiency(std::span<const long> elements, std::span<const double> powers,
                           std::span<const double> chi) {
  std::vector<double> m(elements.begin(), elements.end());
  return spectral_efficiency(std::span<const double>(m), powers, chi);
}

AllocationSolution equal_allocation(const SystemConfig& config, const ChannelQuality& chi) {
  const std::size_t k = chi.size();
  if (k == 0) throw DomainError("equal_allocation: no surfaces");
  const long budget = config.element_budget;
  const long kk = static_cast<long>(k);
  AllocationSolution sol;
  for (long i = 0; i < kk; ++i) sol.elements.push_back(budget / kk + (i < budget % kk ? 1 : 0));
  sol.powers.assign(k, config.power_budget / static_cast<double>(k));
  sol.se = spectral_efficiency(std::span<const long>(sol.elements), sol.powers, chi.chi);
  sol.relaxed_elements.assign(sol.elements.begin(), sol.elements.end());
  sol.relaxed_powers = sol.powers;
  sol.relaxed_se = sol.se;
  return sol;
}

std::vector<long> round_elements(std::span<const double> m_tilde, long budget) {
  if (budget < 0) throw DomainError("round_elements: negative budget");
  std::vector<long> out(m_tilde.size());
  std::vector<double> frac(m_tilde.size());
  double total = 0.0;
  long floor_sum = 0;
  for (std::size_t k = 0; k < m_tilde.size(); ++k) {
    const double v = std::max(0.0, m_tilde[k]);
    total += v;
    out[k] = static_cast<long>(std::floor(v));
    frac[k] = v - static_cast<double>(out[k]);
    floor_sum += out[k];
  }
  const long target = std::min(budget, std::max(floor_sum, std::lround(total)));
  // floors can only exceed the budget when the input already does
  if (floor_sum > budget) throw DomainError("round_elements: relaxed split exceeds the budget");

  std::vector<std::size_t> order(m_tilde.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  for (long i = 0; i < target - floor_sum; ++i) ++out[order[static_cast<std::size_t>(i)]];
  return out;
}

AllocationSolution sca_optimize(const ChannelQuality& chi, const SystemConfig& config,
                                const std::optional<AllocationSolution>& init,
                                const ScaOptions& options) {
  check_chi(chi, "sca_optimize");
  const std::size_t k = chi.size();
  const double power = config.power_budget;
  const long budget = config.element_budget;
  if (!(power > 0)) throw DomainError("sca_optimize: power budget must be positive");

  AllocationSolution sol;
  if (budget == 0) {
    sol.elements.assign(k, 0);
    sol.powers.assign(k, power / static_cast<double>(k));
    sol.relaxed_elements.assign(k, 0.0);
    sol.relaxed_powers = sol.powers;
    sol.trace = {0.0};
    return sol;
  }

  std::vector<std::pair<std::vector<double>, std::vector<double>>> starts;
  if (init) {
    std::vector<double> p = init->relaxed_powers.empty() ? init->powers : init->relaxed_powers;
    std::vector<double> m = init->relaxed_elements;
    if (m.empty()) m.assign(init->elements.begin(), init->elements.end());
    if (p.size() != k || m.size() != k)
      throw DomainError("sca_optimize: init does not match the number of surfaces");
    starts.emplace_back(std::move(p), std::move(m));
  } else if (options.multi_start) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i)
      if (chi.chi[i] > 0) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return chi.chi[a] > chi.chi[b]; });
    for (std::size_t n = 1; n <= order.size(); ++n) {
      std::vector<double> p(k, 0.0);
      std::vector<double> m(k, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        p[order[i]] = power / static_cast<double>(n);
        m[order[i]] = static_cast<double>(budget) / static_cast<double>(n);
      }
      starts.emplace_back(std::move(p), std::move(m));
    }
  } else {
    starts.emplace_back(std::vector<double>(k, power / static_cast<double>(k)),
                        std::vector<double>(k, static_cast<double>(budget) / static_cast<double>(k)));
  }

  std::optional<ScaRun> best;
  for (auto& [p, m] : starts) {
    ScaRun run = run_sca(chi, config, std::move(p), std::move(m), options);
    sol.total_iterations += run.iterations;
    sol.newton_iterations += run.newton;
    if (!best || run.trace.back() > best->trace.back()) best = std::move(run);
  }

  sol.relaxed_powers = best->p;
  sol.relaxed_elements = best->m;
  sol.relaxed_se = best->trace.back();
  sol.trace = best->trace;
  sol.iterations = best->iterations;

  sol.elements = round_elements(sol.relaxed_elements, budget);
  std::vector<double> eta(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto m = static_cast<double>(sol.elements[i]);
    eta[i] = chi.chi[i] * m * m;
  }
  sol.powers = water_filling(eta, power).powers;
  sol.se = spectral_efficiency(std::span<const long>(sol.elements), sol.powers, chi.chi);
  return sol;
}

AllocationSolution brute_force_oracle(const ChannelQuality& chi, const SystemConfig& config,
                                      double max_splits) {
  check_chi(chi, "brute_force_oracle");
  const std::size_t k = chi.size();
  const long budget = config.element_budget;
  // number of (M_1..M_K) with sum <= M is C(M + K, K)
  double splits = 1.0;
  for (std::size_t i = 1; i <= k; ++i)
    splits = splits * static_cast<double>(budget + static_cast<long>(i)) / static_cast<double>(i);
  if (splits > max_splits)
    throw SizeError("brute_force_oracle: " + std::to_string(static_cast<long long>(splits)) +
                    " splits exceed the enumeration guard");

  AllocationSolution best;
  best.se = -1.0;
  std::vector<long> cur(k, 0);
  std::vector<double> eta(k, 0.0);
  auto visit = [&](auto&& self, std::size_t idx, long remaining) -> void {
    if (idx == k) {
      bool any = false;
      for (std::size_t i = 0; i < k; ++i) {
        const auto m = static_cast<double>(cur[i]);
        eta[i] = chi.chi[i] * m * m;
        any = any || eta[i] > 0;
      }
      if (!any) return;
      WaterFilling wf = water_filling(eta, config.power_budget);
      const double se = spectral_efficiency(std::span<const long>(cur), wf.powers, chi.chi);
      if (se > best.se) {
        best.se = se;
        best.elements = cur;
        best.powers = std::move(wf.powers);
      }
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      cur[idx] = v;
      self(self, idx + 1, remaining - v);
    }
    cur[idx] = 0;
  };
  visit(visit, 0, budget);

  if (best.elements.empty()) {
    best.se = 0.0;
    best.elements.assign(k, 0);
    best.powers.assign(k, config.power_budget / static_cast<double>(k));
  }
  best.relaxed_elements.assign(best.elements.begin(), best.elements.end());
  best.relaxed_powers = best.powers;
  best.relaxed_se = best.se;
  return best;
}

}  // namespace irsmux
