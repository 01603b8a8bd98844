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


#include <gtest/gtest.h>

#include "mbco/feasibility.hpp"

namespace mbco {
namespace {

TEST(Feasibility, NyquistFromSampling) {
  EXPECT_DOUBLE_EQ(feasibility_check(20.0, 0.020, 5.0, 12.0).nyquist_ghz, 25.0);
  EXPECT_DOUBLE_EQ(feasibility_check(20.0, 0.040, 5.0, 12.0).nyquist_ghz, 12.5);
}

TEST(Feasibility, TemperatureCeiling) {
  const auto r = feasibility_check(20.0, 0.020, 5.0, 12.0);
  EXPECT_NEAR(r.t_star_h_mk, 239.96, 0.01);
  EXPECT_NEAR(r.t_star_hbar_mk, 38.19, 0.01);
  EXPECT_TRUE(r.all_ok());
  EXPECT_NEAR(feasibility_check(20.0, 0.02, 10.0, 12.0).t_star_h_mk, 2.0 * r.t_star_h_mk, 1e-9);
}

TEST(Feasibility, ZeroFrequencyFailsTemperature) {
  const auto r = feasibility_check(20.0, 0.020, 0.0, 12.0);
  EXPECT_EQ(r.t_star_h_mk, 0.0);
  EXPECT_FALSE(r.temperature_ok);
}

TEST(Feasibility, FlagsEachCondition) {
  EXPECT_FALSE(feasibility_check(80.0, 0.02, 5.0, 12.0).coherence_ok);
  EXPECT_FALSE(feasibility_check(20.0, 0.2, 5.0, 12.0).nyquist_ok);
  EXPECT_FALSE(feasibility_check(20.0, 0.02, 5.0, 500.0).temperature_ok);
}

}  // namespace
}  // namespace mbco
