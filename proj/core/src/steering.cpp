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

#include "irsmux/steering.hpp"

#include "irsmux/errors.hpp"

namespace irsmux {

SteeringVector ula_response(int n, double phase_arg) {
  if (n < 1) throw DomainError("ula_response: n must be >= 1");
  SteeringVector v;
  v.entries.reserve(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) v.entries.push_back(std::polar(1.0, phase_arg * m));
  return v;
}

SteeringVector upa_response(int m_v, int m_h, double phase_v, double phase_h) {
  const SteeringVector rows = ula_response(m_v, phase_v);
  const SteeringVector cols = ula_response(m_h, phase_h);
  SteeringVector v;
  v.entries.reserve(rows.size() * cols.size());
  for (const cplx& r : rows.entries)
    for (const cplx& c : cols.entries) v.entries.push_back(r * c);
  return v;
}

}  // namespace irsmux
