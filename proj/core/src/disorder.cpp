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

#include "mbco/disorder.hpp"

#include <cmath>
#include <numeric>
#include <random>

#include "mbco/errors.hpp"
#include "mbco/rng.hpp"

namespace mbco {

double DisorderRealization::mean_field() const {
  if (h_site.empty()) return 1.0;
  return std::accumulate(h_site.begin(), h_site.end(), 0.0) / static_cast<double>(h_site.size());
}

DisorderRealization make_disorder(double d, std::vector<double> h_site, MomentumGrid grid) {
  if (!(d >= 0.0)) throw ConfigError("disorder strength must be >= 0");
  const int n = static_cast<int>(h_site.size());
  DisorderRealization r;
  r.d = d;
  r.momenta = allowed_momenta(n, grid);
  r.h_site = std::move(h_site);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  r.h_2k.reserve(r.momenta.size());
  for (double k : r.momenta) {
    Complex acc = 0.0;
    for (int site = 0; site < n; ++site) {
      acc += std::polar(r.h_site[site], -2.0 * k * site);
    }
    r.h_2k.push_back(acc * norm);
  }
  return r;
}

DisorderRealization sample_disorder(double d, int n, std::uint64_t seed, std::uint64_t stream,
                                    MomentumGrid grid) {
  if (!(d >= 0.0)) throw ConfigError("disorder strength must be >= 0");
  if (n < 4 || n % 4 != 0) throw ConfigError("chain length must be a positive multiple of 4");
  std::mt19937_64 rng = make_rng(seed, stream, 0x5eedu);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> h(n);
  for (double& v : h) v = 1.0 + d * unit(rng);
  return make_disorder(d, std::move(h), grid);
}

}  // namespace mbco
