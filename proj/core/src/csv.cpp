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
#include <string>

#include "irsmux/errors.hpp"
#include "irsmux/experiments.hpp"

namespace irsmux {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
  return buf;
}

namespace {

std::string quoted(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T, typename F>
std::string joined(const std::vector<T>& xs, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += fmt(xs[i]);
  }
  return out;
}

}  // namespace

std::string to_csv(const ResultTable& table) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const ResultRow& r : table.rows) {
    out += format_real(r.sweep_value);
    out += ',';
    out += to_string(r.strategy);
    out += ',';
    out += std::to_string(r.num_surfaces);
    out += ',';
    out += format_real(r.se_bits);
    out += ',';
    out += format_real(r.erank);
    out += ',';
    out += joined(r.elements, [](long m) { return std::to_string(m); });
    out += ',';
    out += joined(r.powers, format_real);
    out += ',';
    out += std::to_string(r.sca_iters);
    out += ',';
    out += format_real(r.wall_ms);
    out += ',';
    out += quoted(r.error);
    out += '\n';
  }
  return out;
}

void emit_csv(const ResultTable& table, const std::string& path) {
  if (table.rows.empty()) throw DomainError("emit_csv: empty result table");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  const std::string text = to_csv(table);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace irsmux
