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

#include "irsmux/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "irsmux/errors.hpp"

namespace irsmux {

namespace {

const std::set<std::string> kKnownKeys{
    "K",  "N_t",   "N_r",   "wavelength", "d_t",   "d_r",      "d_s",        "tx_pos",
    "rx_pos", "array_axis", "H", "noise", "P",  "M",     "beta0",    "sweep",      "strategies",
    "surfaces", "output", "seed", "timing"};

enum class Quantity { length, power, count, plain };

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

// Splits "30 dBm" into (30, "dBm"); a bare number yields an empty unit.
std::pair<double, std::string> split_quantity(const std::string& field, const std::string& raw) {
  const std::string s = trim(raw);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) throw ParseError(field, "expected a number, got '" + s + "'");
  return {value, trim(std::string(ptr, last))};
}

double scalar_si(const std::string& field, const YAML::Node& node, Quantity q) {
  if (!node.IsScalar()) throw ParseError(field, "expected a scalar value");
  const auto [value, unit] = split_quantity(field, node.Scalar());
  switch (q) {
    case Quantity::length:
      if (unit.empty() || unit == "m") return value;
      if (unit == "cm") return value * 1e-2;
      if (unit == "mm") return value * 1e-3;
      break;
    case Quantity::power:
      if (unit.empty() || unit == "W") return value;
      if (unit == "mW") return value * 1e-3;
      if (unit == "dBm") return dbm_to_watts(value);
      if (unit == "dBW") return std::pow(10.0, value / 10.0);
      break;
    case Quantity::count:
    case Quantity::plain:
      if (unit.empty()) return value;
      break;
  }
  throw ParseError(field, "unsupported unit '" + unit + "'");
}

long integer_value(const std::string& field, const YAML::Node& node) {
  const double v = scalar_si(field, node, Quantity::count);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw ParseError(field, "expected an integer");
  return static_cast<long>(v);
}

Vec2 point(const std::string& field, const YAML::Node& node, bool is_length) {
  if (!node.IsSequence() || node.size() != 2)
    throw ParseError(field, "expected a two-element sequence");
  const Quantity q = is_length ? Quantity::length : Quantity::plain;
  return {scalar_si(field, node[0], q), scalar_si(field, node[1], q)};
}

SweepVariable sweep_variable(const std::string& name) {
  if (name == "element_budget" || name == "M") return SweepVariable::elements;
  if (name == "power_budget" || name == "P") return SweepVariable::power;
  throw ParseError("sweep.variable", "expected element_budget or power_budget, got '" + name + "'");
}

void parse_sweep(const YAML::Node& node, ExperimentSpec& spec) {
  if (!node.IsMap()) throw ParseError("sweep", "expected a mapping");
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (key != "variable" && key != "values") throw ParseError("sweep." + key, "unknown key");
  }
  if (!node["variable"] || !node["variable"].IsScalar())
    throw ParseError("sweep.variable", "missing sweep variable");
  spec.sweep_variable = sweep_variable(node["variable"].Scalar());
  const YAML::Node values = node["values"];
  if (!values || !values.IsSequence() || values.size() == 0)
    throw ParseError("sweep.values", "expected a non-empty sequence");
  for (const auto& v : values) {
    if (spec.sweep_variable == SweepVariable::elements) {
      const long m = integer_value("sweep.values", v);
      if (m < 0) throw ParseError("sweep.values", "element budgets must be non-negative");
      spec.sweep_values.push_back(static_cast<double>(m));
    } else {
      const double p = scalar_si("sweep.values", v, Quantity::power);
      if (!(p > 0)) throw ParseError("sweep.values", "power budgets must be positive");
      spec.sweep_values.push_back(p);
    }
  }
}

}  // namespace

ExperimentSpec parse_config(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ParseError("document", e.what());
  }
  ExperimentSpec spec;
  if (root.IsNull()) return spec;
  if (!root.IsMap()) throw ParseError("document", "expected a key/value mapping");

  SystemConfig& c = spec.scenario;
  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!kKnownKeys.contains(key)) throw ParseError(key, "unknown key");
    const YAML::Node& v = kv.second;
    if (key == "K") {
      c.num_surfaces = static_cast<int>(integer_value(key, v));
    } else if (key == "N_t") {
      c.n_tx = static_cast<int>(integer_value(key, v));
    } else if (key == "N_r") {
      c.n_rx = static_cast<int>(integer_value(key, v));
    } else if (key == "wavelength") {
      c.wavelength = scalar_si(key, v, Quantity::length);
    } else if (key == "d_t") {
      c.tx_spacing = scalar_si(key, v, Quantity::length);
    } else if (key == "d_r") {
      c.rx_spacing = scalar_si(key, v, Quantity::length);
    } else if (key == "d_s") {
      c.irs_spacing = scalar_si(key, v, Quantity::length);
    } else if (key == "tx_pos") {
      c.tx_pos = point(key, v, true);
    } else if (key == "rx_pos") {
      c.rx_pos = point(key, v, true);
    } else if (key == "array_axis") {
      c.array_axis = point(key, v, false);
    } else if (key == "H") {
      c.irs_height = scalar_si(key, v, Quantity::length);
    } else if (key == "noise") {
      c.noise_power = scalar_si(key, v, Quantity::power);
    } else if (key == "P") {
      c.power_budget = scalar_si(key, v, Quantity::power);
    } else if (key == "M") {
      c.element_budget = integer_value(key, v);
    } else if (key == "beta0") {
      c.pathloss_ref_gain = scalar_si(key, v, Quantity::plain);
    } else if (key == "sweep") {
      parse_sweep(v, spec);
    } else if (key == "strategies") {
      if (!v.IsSequence() || v.size() == 0) throw ParseError(key, "expected a non-empty sequence");
      spec.strategies.clear();
      for (const auto& s : v) {
        try {
          spec.strategies.push_back(strategy_from_string(s.as<std::string>()));
        } catch (const DomainError& e) {
          throw ParseError(key, e.what());
        }
      }
    } else if (key == "surfaces") {
      if (!v.IsSequence() || v.size() == 0) throw ParseError(key, "expected a non-empty sequence");
      for (const auto& s : v) spec.surfaces.push_back(static_cast<int>(integer_value(key, s)));
    } else if (key == "output") {
      spec.output_path = v.as<std::string>();
    } else if (key == "seed") {
      const long s = integer_value(key, v);
      if (s < 0) throw ParseError(key, "seed must be non-negative");
      spec.seed = static_cast<std::uint64_t>(s);
    } else if (key == "timing") {
      try {
        spec.record_timing = v.as<bool>();
      } catch (const YAML::Exception&) {
        throw ParseError(key, "expected a boolean");
      }
    }
  }

  const int k_max = std::min(c.n_tx, c.n_rx);
  if (c.num_surfaces > k_max)
    throw ParseError("K", "K = " + std::to_string(c.num_surfaces) +
                              " exceeds min(N_t, N_r) = " + std::to_string(k_max));
  for (int k : spec.surfaces) {
    if (k < 1 || k > k_max)
      throw ParseError("surfaces", "K = " + std::to_string(k) + " outside [1, min(N_t, N_r)]");
  }
  if (spec.surfaces.empty()) spec.surfaces = {c.num_surfaces};

  try {
    validate(c);
  } catch (const DomainError& e) {
    throw ParseError("scenario", e.what());
  }
  return spec;
}

ExperimentSpec load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

namespace {

ResultRow run_row(const ExperimentSpec& spec, double value, Strategy strategy, int k) {
  ResultRow row;
  row.sweep_value = value;
  row.strategy = strategy;
  row.num_surfaces = strategy == Strategy::single_irs ? 1 : k;

  SystemConfig cfg = spec.scenario;
  if (spec.sweep_variable == SweepVariable::elements)
    cfg.element_budget = std::lround(value);
  else
    cfg.power_budget = value;

  const auto start = std::chrono::steady_clock::now();
  try {
    const ScenarioOutcome out = evaluate_scenario(cfg, strategy, row.num_surfaces);
    row.se_bits = out.allocation.se;
    row.erank = out.erank;
    row.elements = out.allocation.elements;
    row.powers = out.allocation.powers;
    row.sca_iters = out.allocation.total_iterations;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  if (spec.record_timing) {
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return row;
}

}  // namespace

ResultTable run_sweep(const ExperimentSpec& spec) {
  if (spec.sweep_values.empty()) throw DomainError("run_sweep: no sweep values");
  if (spec.strategies.empty()) throw DomainError("run_sweep: no strategies");
  const std::vector<int> surfaces =
      spec.surfaces.empty() ? std::vector<int>{spec.scenario.num_surfaces} : spec.surfaces;

  ResultTable table;
  for (double value : spec.sweep_values) {
    for (Strategy strategy : spec.strategies) {
      if (strategy == Strategy::single_irs) {
        table.rows.push_back(run_row(spec, value, strategy, 1));
        continue;
      }
      for (int k : surfaces) table.rows.push_back(run_row(spec, value, strategy, k));
    }
  }
  return table;
}

}  // namespace irsmux
