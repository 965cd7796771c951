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

#include <complex>
#include <cstddef>
#include <vector>

namespace irsmux {

using cplx = std::complex<double>;

// Unit-modulus array response; entry 0 is always 1.
struct SteeringVector {
  std::vector<cplx> entries;

  std::size_t size() const noexcept { return entries.size(); }
  const cplx& operator[](std::size_t i) const { return entries[i]; }
};

// ULA response a_n(X) = [1, e^{jX}, ..., e^{jX(n-1)}].
SteeringVector ula_response(int n, double phase_arg);

// UPA response a_{m_v}(X) (x) a_{m_h}(Y), rows outer.
SteeringVector upa_response(int m_v, int m_h, double phase_v, double phase_h);

}  // namespace irsmux
