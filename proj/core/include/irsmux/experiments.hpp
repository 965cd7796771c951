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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irsmux/analysis.hpp"
#include "irsmux/config.hpp"
#include "irsmux/pipeline.hpp"

namespace irsmux {

struct ExperimentSpec {
  SystemConfig scenario;
  SweepVariable sweep_variable = SweepVariable::elements;
  std::vector<double> sweep_values;  // elements, or watts
  std::vector<Strategy> strategies{Strategy::multi_sca};
  std::vector<int> surfaces;
  std::string output_path;
  std::uint64_t seed = 0;
  bool record_timing = false;
};

/// Parses a YAML key/value document. Missing keys fall back to the
/// SystemConfig defaults; powers accept W, mW or dBm and are stored in watts.
/// Throws ParseError naming the offending field.
ExperimentSpec parse_config(std::string_view text);
ExperimentSpec load_config(const std::string& path);

struct ResultRow {
  double sweep_value = 0.0;
  Strategy strategy = Strategy::multi_sca;
  int num_surfaces = 0;
  double se_bits = 0.0;
  double erank = 0.0;
  std::vector<long> elements;
  std::vector<double> powers;
  int sca_iters = 0;
  double wall_ms = 0.0;
  std::string error;
};

struct ResultTable {
  std::vector<ResultRow> rows;
};

// One row per (sweep value, strategy, K); failures land in the row's error field.
ResultTable run_sweep(const ExperimentSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "sweep_value,strategy,K,se_bits,erank,elements_list,powers_list,sca_iters,wall_ms,error";

std::string format_real(double value);
std::string to_csv(const ResultTable& table);
void emit_csv(const ResultTable& table, const std::string& path);

}  // namespace irsmux
