// Copyright 2026 The mbco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MBCO_MOMENTA_HPP
#define MBCO_MOMENTA_HPP

#include <vector>

namespace mbco {

/// Quantization of the fermion wave numbers on the ring.
///
/// kAntiperiodic uses k = pi (2j + 1) / N, j = 0 .. N/4 - 1. The fully
/// x-polarized initial state has even fermion parity, and in that sector the
/// Jordan-Wigner boundary term makes the fermions antiperiodic, so these
/// quadruplets cover every mode exactly once and the block solution equals
/// the spin-chain dynamics.
///
/// kPeriodic uses k = 2 pi j / N, j = 1 .. N/4 - 1, dropping the boundary
/// modes k = 0 and k = pi / 2. It is an O(1/N) approximation kept for
/// comparison.
enum class MomentumGrid { kAntiperiodic, kPeriodic };

/// One representative k in (0, pi/2) per quadruplet {k, -k, pi - k, pi + k},
/// sorted ascending. Throws ConfigError unless N is a positive multiple of 4.
std::vector<double> allowed_momenta(int n, MomentumGrid grid = MomentumGrid::kAntiperiodic);

}  // namespace mbco

#endif  // MBCO_MOMENTA_HPP
