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

#ifndef MBCO_CHAIN_HPP
#define MBCO_CHAIN_HPP

#include <string>
#include <string_view>

namespace mbco {

/// Which bond sublattice carries the strong coupling J + delta. Bond n joins
/// sites n and n + 1 (mod N).
enum class BondParity { kEven, kOdd };

std::string_view to_string(BondParity parity);
BondParity parse_bond_parity(std::string_view text);

/// Staggered antiferromagnetic Ising ring with alternating bonds J + delta
/// and J - delta. Dimensionless; the schedule supplies the frequency scale.
struct ChainSpec {
  int n = 8;
  double j = 1.0;
  double delta = 0.0;
  BondParity strong_bond_parity = BondParity::kEven;

  /// Throws ConfigError unless N >= 4, N % 4 == 0, J > 0 and 0 <= delta < J.
  void validate() const;

  bool is_strong(int bond) const;
  double bond_strength(int bond) const;

  /// +1 on strong bonds, -1 on weak bonds.
  int strong_sign(int bond) const { return is_strong(bond) ? 1 : -1; }

  /// Staggering as it enters the momentum blocks. The blocks are written for
  /// strong even bonds, so odd parity flips its sign.
  double signed_delta() const {
    return strong_bond_parity == BondParity::kEven ? delta : -delta;
  }
};

}  // namespace mbco

#endif  // MBCO_CHAIN_HPP
