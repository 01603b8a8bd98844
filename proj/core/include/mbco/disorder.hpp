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

#ifndef MBCO_DISORDER_HPP
#define MBCO_DISORDER_HPP

#include <cstdint>
#include <vector>

#include "mbco/block_hamiltonian.hpp"
#include "mbco/momenta.hpp"

namespace mbco {

/// Transverse-field disorder h_n = 1 + d x_n with x_n ~ U[-1, 1].
struct DisorderRealization {
  double d = 0.0;
  std::vector<double> h_site;
  /// Block wave numbers the amplitudes below belong to.
  std::vector<double> momenta;
  /// h_q = N^{-1/2} sum_n exp(-i q n) h_n evaluated at q = 2k, one per block.
  std::vector<Complex> h_2k;

  /// Site average of h_n; the q = 0 component acts as a uniform field.
  double mean_field() const;
};

/// Builds the realization from explicit site multipliers.
DisorderRealization make_disorder(double d, std::vector<double> h_site,
                                  MomentumGrid grid = MomentumGrid::kAntiperiodic);

/// Draws N site multipliers. Deterministic in (seed, stream); independent
/// realizations of one study use stream = realization index.
DisorderRealization sample_disorder(double d, int n, std::uint64_t seed, std::uint64_t stream = 0,
                                    MomentumGrid grid = MomentumGrid::kAntiperiodic);

}  // namespace mbco

#endif  // MBCO_DISORDER_HPP
