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

#include "mbco/momenta.hpp"

#include <numbers>
#include <string>

#include "mbco/errors.hpp"

namespace mbco {

std::vector<double> allowed_momenta(int n, MomentumGrid grid) {
  if (n < 4 || n % 4 != 0) {
    throw ConfigError("momentum grid needs N divisible by 4 (got " + std::to_string(n) + ")");
  }
  const double pi = std::numbers::pi;
  std::vector<double> ks;
  if (grid == MomentumGrid::kAntiperiodic) {
    for (int j = 0; j < n / 4; ++j) ks.push_back(pi * (2 * j + 1) / n);
  } else {
    for (int j = 1; j < n / 4; ++j) ks.push_back(2.0 * pi * j / n);
  }
  return ks;
}

}  // namespace mbco
