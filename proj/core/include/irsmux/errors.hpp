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

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace irsmux {

// Invalid argument or precondition violation (bad shapes, non-positive lengths, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Greedy placement ran out of candidates before selecting K surfaces.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, int iteration)
      : std::runtime_error(what), iteration_(iteration) {}

  // 1-based greedy iteration at which the pool was empty.
  int iteration() const noexcept { return iteration_; }

 private:
  int iteration_;
};

// The convex subproblem solver did not certify an optimum within its iteration cap.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, std::vector<double> last_iterate, double kkt_residual,
              double newton_decrement)
      : std::runtime_error(what),
        last_iterate_(std::move(last_iterate)),
        kkt_residual_(kkt_residual),
        newton_decrement_(newton_decrement) {}

  // Concatenated (powers, relaxed elements) of the last iterate.
  const std::vector<double>& last_iterate() const noexcept { return last_iterate_; }
  double kkt_residual() const noexcept { return kkt_residual_; }
  double newton_decrement() const noexcept { return newton_decrement_; }

 private:
  std::vector<double> last_iterate_;
  double kkt_residual_;
  double newton_decrement_;
};

// Problem too large for an enumeration routine.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Configuration document rejected; field() names the offending key.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irsmux
