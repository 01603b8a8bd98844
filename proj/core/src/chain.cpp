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

#include "mbco/chain.hpp"

#include <cmath>

#include "mbco/errors.hpp"

namespace mbco {

std::string_view to_string(BondParity parity) {
  return parity == BondParity::kEven ? "even" : "odd";
}

BondParity parse_bond_parity(std::string_view text) {
  if (text == "even") return BondParity::kEven;
  if (text == "odd") return BondParity::kOdd;
  throw ConfigError("bond parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

void ChainSpec::validate() const {
  if (n < 4 || n % 4 != 0) {
    throw ConfigError("chain length must be a positive multiple of 4 (got " + std::to_string(n) + ")");
  }
  if (!(j > 0.0) || !std::isfinite(j)) {
    throw ConfigError("coupling J must be positive");
  }
  if (!(delta >= 0.0) || !(delta < j)) {
    throw ConfigError("staggering must satisfy 0 <= delta < J");
  }
}

bool ChainSpec::is_strong(int bond) const {
  const bool even = (bond % 2) == 0;
  return strong_bond_parity == BondParity::kEven ? even : !even;
}

double ChainSpec::bond_strength(int bond) const {
  return is_strong(bond) ? j + delta : j - delta;
}

}  // namespace mbco
