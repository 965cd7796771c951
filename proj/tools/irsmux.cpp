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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsmux/analysis.hpp"
#include "irsmux/errors.hpp"
#include "irsmux/experiments.hpp"
#include "irsmux/pipeline.hpp"

namespace {

using nlohmann::ordered_json;
using namespace irsmux;

struct Options {
  std::string config_path;
  std::string out_path;
  std::string strategy = "multi_sca";
  bool quiet = false;
  bool strict = false;
  bool timing = false;
};

ExperimentSpec load_spec(const Options& opt) {
  ExperimentSpec spec = opt.config_path.empty() ? parse_config("") : load_config(opt.config_path);
  if (opt.timing) spec.record_timing = true;
  return spec;
}

void write_text(const std::string& text, const std::string& path, bool quiet) {
  if (path.empty()) {
    if (!quiet) std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

ordered_json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

ordered_json surface_json(const PlacedSurface& s) {
  return {{"candidate_index", s.candidate_index},
          {"aod_index", s.aod_index},
          {"aoa_index", s.aoa_index},
          {"aod_phase", s.aod_phase},
          {"aoa_phase", s.aoa_phase},
          {"position", {s.position.x, s.position.y}},
          {"dist_tx", s.dist_tx},
          {"dist_rx", s.dist_rx},
          {"rho", complex_json(s.rho)}};
}

ordered_json allocation_json(const AllocationSolution& a) {
  return {{"elements", a.elements},
          {"powers", a.powers},
          {"se", a.se},
          {"relaxed_elements", a.relaxed_elements},
          {"relaxed_powers", a.relaxed_powers},
          {"relaxed_se", a.relaxed_se},
          {"iterations", a.iterations},
          {"total_iterations", a.total_iterations},
          {"newton_iterations", a.newton_iterations},
          {"trace", a.trace}};
}

int cmd_place(const Options& opt) {
  const ExperimentSpec spec = load_spec(opt);
  const SystemConfig& cfg = spec.scenario;
  const AngleGrids grids = dft_angle_grids(cfg);
  const std::vector<CandidateEntry> cands = enumerate_candidates(cfg);
  const PlacementResult placement = greedy_select(cands, cfg.num_surfaces);

  ordered_json doc;
  doc["grid_tx"] = grids.tx;
  doc["grid_rx"] = grids.rx;
  ordered_json list = ordered_json::array();
  for (const CandidateEntry& c : cands) {
    list.push_back({{"aod_index", c.aod_index},
                    {"aoa_index", c.aoa_index},
                    {"aod_phase", c.aod_phase},
                    {"aoa_phase", c.aoa_phase},
                    {"gain", c.gain},
                    {"position", {c.position.x, c.position.y}},
                    {"dist_tx", c.dist_tx},
                    {"dist_rx", c.dist_rx}});
  }
  doc["candidates"] = list;
  doc["selection_order"] = placement.selection_order;
  ordered_json surfaces = ordered_json::array();
  for (const PlacedSurface& s : placement.surfaces) surfaces.push_back(surface_json(s));
  doc["surfaces"] = surfaces;
  doc["pool_evaluations"] = placement.pool_evaluations;
  write_text(doc.dump(2) + "\n", opt.out_path, opt.quiet);
  return 0;
}

int cmd_optimize(const Options& opt) {
  const ExperimentSpec spec = load_spec(opt);
  const Strategy strategy = strategy_from_string(opt.strategy);
  const ScenarioOutcome out =
      evaluate_scenario(spec.scenario, strategy, spec.scenario.num_surfaces);

  ordered_json doc;
  doc["strategy"] = std::string(to_string(strategy));
  doc["K"] = out.placement.surfaces.size();
  doc["element_budget"] = spec.scenario.element_budget;
  doc["power_budget"] = spec.scenario.power_budget;
  doc["chi"] = out.chi.chi;
  ordered_json surfaces = ordered_json::array();
  for (const PlacedSurface& s : out.placement.surfaces) surfaces.push_back(surface_json(s));
  doc["surfaces"] = surfaces;
  doc["allocation"] = allocation_json(out.allocation);
  doc["singular_values"] = out.singular_values;
  doc["erank"] = out.erank;
  write_text(doc.dump(2) + "\n", opt.out_path, opt.quiet);
  return 0;
}

int cmd_sweep(const Options& opt) {
  if (opt.config_path.empty()) throw ParseError("--config", "sweep requires a config file");
  const ExperimentSpec spec = load_spec(opt);
  const ResultTable table = run_sweep(spec);
  const std::string path = opt.out_path.empty() ? spec.output_path : opt.out_path;
  if (path.empty())
    write_text(to_csv(table), "", opt.quiet);
  else
    emit_csv(table, path);

  int errors = 0;
  for (const ResultRow& r : table.rows) {
    if (r.error.empty()) continue;
    ++errors;
    if (!opt.quiet)
      std::cerr << "row " << format_real(r.sweep_value) << " " << to_string(r.strategy)
                << " K=" << r.num_surfaces << ": " << r.error << "\n";
  }
  return opt.strict && errors > 0 ? 1 : 0;
}

int cmd_oracle(const Options& opt) {
  const ExperimentSpec spec = load_spec(opt);
  const SystemConfig& cfg = spec.scenario;
  const PlacementResult placement = greedy_select(enumerate_candidates(cfg), cfg.num_surfaces);
  const ChannelQuality chi = channel_quality(placement, cfg.noise_power);
  const AllocationSolution exact = brute_force_oracle(chi, cfg);
  const AllocationSolution sca = sca_optimize(chi, cfg);

  ordered_json doc;
  doc["K"] = cfg.num_surfaces;
  doc["element_budget"] = cfg.element_budget;
  doc["power_budget"] = cfg.power_budget;
  doc["chi"] = chi.chi;
  doc["oracle"] = {{"elements", exact.elements}, {"powers", exact.powers}, {"se", exact.se}};
  doc["sca"] = {{"elements", sca.elements}, {"powers", sca.powers}, {"se", sca.se}};
  doc["sca_to_oracle_ratio"] = exact.se > 0 ? sca.se / exact.se : 1.0;
  write_text(doc.dump(2) + "\n", opt.out_path, opt.quiet);
  return 0;
}

int cmd_check_props(const Options& opt) {
  const ExperimentSpec spec = load_spec(opt);
  const std::vector<CheckOutcome> checks = run_proposition_checks(spec.scenario);
  std::string text;
  bool all = true;
  for (const CheckOutcome& c : checks) {
    all = all && c.passed;
    text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " " + c.detail + "\n";
  }
  write_text(text, opt.out_path, opt.quiet);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"irsmux: placement and resource allocation for multi-IRS aided MIMO links"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "YAML scenario / experiment file")
        ->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_path, "write output here instead of stdout");
    sub->add_flag("--quiet", opt.quiet, "suppress stdout and diagnostics");
    sub->add_flag("--strict", opt.strict, "exit nonzero when any sweep row failed");
  };

  CLI::App* place = app.add_subcommand("place", "list candidates and the greedy selection");
  CLI::App* optimize = app.add_subcommand("optimize", "solve one scenario");
  CLI::App* sweep = app.add_subcommand("sweep", "run an experiment sweep to CSV");
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force allocation of a small instance");
  CLI::App* props = app.add_subcommand("check-props", "run the analytical checks");
  for (CLI::App* sub : {place, optimize, sweep, oracle, props}) add_common(sub);
  optimize->add_option("--strategy", opt.strategy, "single_irs, multi_sca or multi_equal")
      ->check(CLI::IsMember({"single_irs", "multi_sca", "multi_equal"}));
  sweep->add_flag("--timing", opt.timing, "record wall-clock time per row");

  CLI11_PARSE(app, argc, argv);

  try {
    if (place->parsed()) return cmd_place(opt);
    if (optimize->parsed()) return cmd_optimize(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
    if (props->parsed()) return cmd_check_props(opt);
  } catch (const std::exception& e) {
    std::cerr << "irsmux: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
