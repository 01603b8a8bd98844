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


#include <numbers>

#include <gtest/gtest.h>

#include "mbco/errors.hpp"
#include "mbco/momenta.hpp"

namespace mbco {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Momenta, PeriodicEnumeration) {
  const auto k8 = allowed_momenta(8, MomentumGrid::kPeriodic);
  ASSERT_EQ(k8.size(), 1u);
  EXPECT_DOUBLE_EQ(k8[0], kPi / 4);
  EXPECT_EQ(allowed_momenta(160, MomentumGrid::kPeriodic).size(), 39u);
  EXPECT_TRUE(allowed_momenta(4, MomentumGrid::kPeriodic).empty());
}

TEST(Momenta, AntiperiodicCoversQuarterZone) {
  const auto ks = allowed_momenta(160);
  ASSERT_EQ(ks.size(), 40u);
  EXPECT_DOUBLE_EQ(ks.front(), kPi / 160);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    EXPECT_GT(ks[i], 0.0);
    EXPECT_LT(ks[i], kPi / 2);
    if (i > 0) EXPECT_GT(ks[i], ks[i - 1]);
  }
  ASSERT_EQ(allowed_momenta(4).size(), 1u);
  EXPECT_DOUBLE_EQ(allowed_momenta(4)[0], kPi / 4);
}

TEST(Momenta, RejectsBadLength) {
  EXPECT_THROW(allowed_momenta(10), ConfigError);
  EXPECT_THROW(allowed_momenta(0), ConfigError);
}

}  // namespace
}  // namespace mbco
