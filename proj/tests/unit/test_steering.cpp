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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "irsmux/steering.hpp"
#include "oracles.hpp"

using namespace irsmux;
using Catch::Matchers::WithinAbs;

namespace {
void require_entries(const SteeringVector& v, const std::vector<cplx>& expected) {
  REQUIRE(v.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK_THAT(v[i].real(), WithinAbs(expected[i].real(), 1e-12));
    CHECK_THAT(v[i].imag(), WithinAbs(expected[i].imag(), 1e-12));
  }
}
}  // namespace

TEST_CASE("ula_response small cases", "[steering]") {
  require_entries(ula_response(1, 0.7), {1.0});
  require_entries(ula_response(4, 0.0), {1.0, 1.0, 1.0, 1.0});
  require_entries(ula_response(2, std::numbers::pi), {1.0, -1.0});
}

TEST_CASE("ula_response entries follow exp(j x m)", "[steering]") {
  const SteeringVector v = ula_response(7, 0.3);
  for (std::size_t m = 0; m < v.size(); ++m) {
    CHECK_THAT(std::abs(v[m] - std::polar(1.0, 0.3 * double(m))), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(v[m]), WithinAbs(1.0, 1e-12));
  }
}

TEST_CASE("ula conjugate equals negated argument", "[steering]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
  for (int t = 0; t < 50; ++t) {
    const double x = u(rng);
    const SteeringVector a = ula_response(9, x);
    const SteeringVector b = ula_response(9, -x);
    for (std::size_t m = 0; m < a.size(); ++m)
      CHECK_THAT(std::abs(std::conj(a[m]) - b[m]), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("upa_response small cases", "[steering]") {
  require_entries(upa_response(1, 5, 0.0, 0.4), ula_response(5, 0.4).entries);
  require_entries(upa_response(2, 2, 0.0, 0.0), {1.0, 1.0, 1.0, 1.0});
  require_entries(upa_response(2, 2, std::numbers::pi, std::numbers::pi), {1.0, -1.0, -1.0, 1.0});
}

TEST_CASE("upa factors into its two ULAs for every shape up to 8x8", "[steering]") {
  const double pv = 0.71;
  const double ph = -2.3;
  for (int mv = 1; mv <= 8; ++mv) {
    for (int mh = 1; mh <= 8; ++mh) {
      const auto ref = oracle::kron(ula_response(mv, pv).entries, ula_response(mh, ph).entries);
      const SteeringVector v = upa_response(mv, mh, pv, ph);
      REQUIRE(v.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i)
        REQUIRE(std::abs(v[i] - ref[i]) <= 1e-12);
      CHECK(v[0] == cplx(1.0, 0.0));
    }
  }
}
