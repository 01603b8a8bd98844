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

#ifndef MBCO_BLOCK_HAMILTONIAN_HPP
#define MBCO_BLOCK_HAMILTONIAN_HPP

#include <array>
#include <complex>

#include <Eigen/Core>

namespace mbco {

using Complex = std::complex<double>;
using Block6 = Eigen::Matrix<Complex, 6, 6>;
using Block8 = Eigen::Matrix<Complex, 8, 8>;

/// Occupations (n_k, n_{-k}, n_{pi-k}, n_{pi+k}) of the block basis. A label
/// stands for the state c+_k^{n0} c+_{-k}^{n1} c+_{pi-k}^{n2} c+_{pi+k}^{n3}
/// |vac>, with creation operators applied in that mode order. The first six
/// states are the ones reachable from the vacuum in a clean chain; the last
/// two open up under backscattering.
using Occupation = std::array<int, 4>;
inline constexpr std::array<Occupation, 8> kBlockBasis = {{
    {1, 1, 1, 1},
    {1, 1, 0, 0},
    {1, 0, 1, 0},
    {0, 1, 0, 1},
    {0, 0, 1, 1},
    {0, 0, 0, 0},
    {1, 0, 0, 1},
    {0, 1, 1, 0},
}};

/// Index of the vacuum |0,0,0,0> in the block basis.
inline constexpr int kVacuumIndex = 5;

/// Clean quadruplet Hamiltonian in GHz for bonds (coupling_j +/- coupling_delta)
/// and transverse field `field`. coupling_delta > 0 puts the strong bonds on
/// even sites; a negative value describes the odd-parity chain.
/// Requires 0 < k < pi/2.
Block6 build_block6(double k, double coupling_j, double coupling_delta, double field);

/// Clean block extended by |1,0,0,1> and |0,1,1,0>, plus elastic
/// backscattering k <-> -k and pi-k <-> pi+k of strength `backscatter`
/// (= field * h_2k / sqrt(N)).
Block8 build_block8(double k, double coupling_j, double coupling_delta, double field,
                    Complex backscatter);

}  // namespace mbco

#endif  // MBCO_BLOCK_HAMILTONIAN_HPP
