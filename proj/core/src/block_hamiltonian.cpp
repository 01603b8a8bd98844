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

#include "mbco/block_hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "mbco/errors.hpp"

namespace mbco {
namespace {

void check_k(double k) {
  if (!(k > 0.0 && k < 0.5 * std::numbers::pi)) {
    throw ConfigError("block wave number must lie in (0, pi/2)");
  }
}

}  // namespace

Block6 build_block6(double k, double coupling_j, double coupling_delta, double field) {
  check_k(k);
  const Complex i(0.0, 1.0);
  const double s = std::sin(k);
  const double c = std::cos(k);
  const double h = field;
  const double j = coupling_j;
  const double d = coupling_delta;

  Block6 m;
  // clang-format off
  m << 4.0*h,          -2.0*j*i*s,     -2.0*d*c,      -2.0*d*c,      -2.0*j*i*s,     0,
       2.0*j*i*s,      -4.0*j*c,       -2.0*i*d*s,    -2.0*i*d*s,    0,            -2.0*i*j*s,
       -2.0*d*c,       2.0*i*d*s,      0,           0,           -2.0*i*d*s,     2.0*d*c,
       -2.0*d*c,       2.0*i*d*s,      0,           0,           -2.0*i*d*s,     2.0*d*c,
       2.0*j*i*s,      0,            2.0*i*d*s,     2.0*i*d*s,     4.0*j*c,        -2.0*i*j*s,
       0,            2.0*i*j*s,      2.0*d*c,       2.0*d*c,       2.0*i*j*s,      -4.0*h;
  // clang-format on
  return m;
}

Block8 build_block8(double k, double coupling_j, double coupling_delta, double field,
                    Complex backscatter) {
  Block8 m = Block8::Zero();
  m.topLeftCorner<6, 6>() = build_block6(k, coupling_j, coupling_delta, field);

  // The field term 2 * Gamma * sum_n h_n n_n contributes
  // 2b (c+_k c_{-k} + c+_{pi+k} c_{pi-k}) + h.c. with b = Gamma h_2k / sqrt(N).
  // |1,0,0,1> and |0,1,1,0> are eigenstates of the clean part with energy 0.
  const Complex b2 = 2.0 * backscatter;
  const Complex b2c = std::conj(b2);
  constexpr int k1010 = 2, k0101 = 3, k1001 = 6, k0110 = 7;
  m(k1001, k0101) = b2;   // c+_k c_{-k}
  m(k1010, k0110) = b2;   // c+_k c_{-k}
  m(k1001, k1010) = b2;   // c+_{pi+k} c_{pi-k}
  m(k0101, k0110) = b2;   // c+_{pi+k} c_{pi-k}
  m(k0101, k1001) = b2c;
  m(k0110, k1010) = b2c;
  m(k1010, k1001) = b2c;
  m(k0110, k0101) = b2c;
  return m;
}

}  // namespace mbco
