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


#include <cmath>

#include <gtest/gtest.h>

#include "mbco/disorder.hpp"
#include "mbco/errors.hpp"

namespace mbco {
namespace {

TEST(Disorder, ZeroStrengthIsUniform) {
  const auto r = sample_disorder(0.0, 16, 42);
  for (double h : r.h_site) EXPECT_EQ(h, 1.0);
  for (Complex c : r.h_2k) EXPECT_LT(std::abs(c), 1e-13);
  EXPECT_EQ(r.mean_field(), 1.0);
}

TEST(Disorder, SeedReproducesBitIdentically) {
  const auto a = sample_disorder(0.5, 160, 7, 3);
  const auto b = sample_disorder(0.5, 160, 7, 3);
  const auto c = sample_disorder(0.5, 160, 7, 4);
  EXPECT_EQ(a.h_site, b.h_site);
  EXPECT_NE(a.h_site, c.h_site);
  for (std::size_t i = 0; i < a.h_2k.size(); ++i) EXPECT_EQ(a.h_2k[i], b.h_2k[i]);
}

TEST(Disorder, FieldsStayInsideBand) {
  const auto r = sample_disorder(0.5, 160, 1);
  for (double h : r.h_site) {
    EXPECT_GE(h, 0.5);
    EXPECT_LE(h, 1.5);
  }
}

TEST(Disorder, SiteMeanIsUnbiased) {
  const int n = 160, reps = 10000;
  double sum = 0.0, sum2 = 0.0;
  for (int r = 0; r < reps; ++r) {
    const double m = sample_disorder(0.5, n, 99, r).mean_field();
    sum += m;
    sum2 += m * m;
  }
  const double mean = sum / reps;
  const double se = std::sqrt((sum2 / reps - mean * mean) / reps);
  EXPECT_LT(std::abs(mean - 1.0), 3.0 * se);
}

TEST(Disorder, FourierAmplitudeOfSingleMode) {
  // h_n = 1 + a cos(2 k0 n) puts weight sqrt(N) a / 2 in h_2k0.
  const int n = 16;
  const auto base = make_disorder(0.0, std::vector<double>(n, 1.0));
  const double k0 = base.momenta[1];
  std::vector<double> h(n);
  for (int i = 0; i < n; ++i) h[i] = 1.0 + 0.2 * std::cos(2.0 * k0 * i);
  const auto r = make_disorder(0.2, h);
  EXPECT_NEAR(std::abs(r.h_2k[1]), std::sqrt(n) * 0.1, 1e-12);
  EXPECT_LT(std::abs(r.h_2k[0]), 1e-12);
}

TEST(Disorder, RejectsNegativeStrength) {
  EXPECT_THROW(sample_disorder(-0.1, 8, 1), ConfigError);
  EXPECT_THROW(sample_disorder(0.1, 10, 1), ConfigError);
}

}  // namespace
}  // namespace mbco
