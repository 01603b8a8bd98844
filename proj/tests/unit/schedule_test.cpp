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
#include <sstream>

#include <gtest/gtest.h>

#include "mbco/chain.hpp"
#include "mbco/errors.hpp"
#include "mbco/schedule.hpp"

namespace mbco {
namespace {

TEST(Schedule, LinearEndpointsAndMidpoint) {
  const auto s = AnnealSchedule::linear(11.0, 15.0);
  EXPECT_EQ(s.eval(0.0).coupling_ghz, 0.0);
  EXPECT_EQ(s.eval(0.0).field_ghz, 11.0);
  EXPECT_EQ(s.eval(1.0).coupling_ghz, 15.0);
  EXPECT_EQ(s.eval(1.0).field_ghz, 0.0);
  EXPECT_DOUBLE_EQ(s.eval(0.5).coupling_ghz, 7.5);
  EXPECT_DOUBLE_EQ(s.eval(0.5).field_ghz, 5.5);
}

TEST(Schedule, RejectsFractionOutsideUnitInterval) {
  const auto s = AnnealSchedule::linear(11.0, 15.0);
  EXPECT_THROW(s.eval(-1e-9), ConfigError);
  EXPECT_THROW(s.eval(1.0 + 1e-9), ConfigError);
  EXPECT_THROW(AnnealSchedule::linear(0.0, 15.0), ConfigError);
}

TEST(Schedule, TabulatedInterpolatesPiecewiseLinearly) {
  const auto s = AnnealSchedule::tabulated({{0.0, 0.0, 10.0}, {0.5, 4.0, 2.0}, {1.0, 6.0, 0.0}});
  EXPECT_DOUBLE_EQ(s.eval(0.25).coupling_ghz, 2.0);
  EXPECT_DOUBLE_EQ(s.eval(0.25).field_ghz, 6.0);
  EXPECT_DOUBLE_EQ(s.eval(0.75).coupling_ghz, 5.0);
  EXPECT_DOUBLE_EQ(s.eval(1.0).field_ghz, 0.0);
}

TEST(Schedule, TabulatedValidation) {
  EXPECT_THROW(AnnealSchedule::tabulated({{0.1, 0.0, 1.0}, {1.0, 1.0, 0.0}}), ConfigError);
  EXPECT_THROW(AnnealSchedule::tabulated({{0.0, 0.0, 1.0}, {0.9, 1.0, 0.0}}), ConfigError);
  EXPECT_THROW(AnnealSchedule::tabulated({{0.0, 0.0, 1.0}, {0.5, 2.0, 0.5}, {1.0, 1.0, 0.0}}),
               ConfigError);
  EXPECT_THROW(AnnealSchedule::tabulated({{0.0, 0.1, 1.0}, {1.0, 1.0, 0.0}}), ConfigError);
}

TEST(Schedule, CsvRoundTrip) {
  const auto s = AnnealSchedule::tabulated({{0.0, 0.0, 3.0}, {0.4, 1.5, 1.0}, {1.0, 2.0, 0.0}});
  std::stringstream buf;
  write_schedule_csv(buf, s);
  const auto back = read_schedule_csv(buf);
  ASSERT_EQ(back.table().size(), 3u);
  EXPECT_DOUBLE_EQ(back.eval(0.2).coupling_ghz, s.eval(0.2).coupling_ghz);
  EXPECT_DOUBLE_EQ(back.eval(0.7).field_ghz, s.eval(0.7).field_ghz);
}

TEST(CriticalS, SymmetricCrossing) {
  ChainSpec chain{8, 1.0, 0.0};
  EXPECT_NEAR(critical_s(AnnealSchedule::linear(7.0, 7.0), chain), 0.5, 1e-10);
}

TEST(CriticalS, ClosedFormForStaggeredChain) {
  ChainSpec chain{8, 1.0, 0.5};
  const double expected = 11.0 / (11.0 + 15.0 * std::sqrt(1.25));
  const auto sched = AnnealSchedule::linear(11.0, 15.0);
  const double sc = critical_s(sched, chain);
  EXPECT_NEAR(sc, expected, 1e-10);
  const auto p = sched.eval(sc);
  EXPECT_LT(std::abs(std::hypot(1.0, 0.5) * p.coupling_ghz - p.field_ghz), 1e-8);
}

TEST(CriticalS, InvariantUnderCommonRescaling) {
  ChainSpec chain{8, 1.0, 0.3};
  const auto sched = AnnealSchedule::linear(11.0, 15.0);
  EXPECT_NEAR(critical_s(sched, chain), critical_s(sched.scaled(3.7), chain), 1e-10);
}

TEST(CriticalS, HardwareTableCrossesNearOneThird) {
  const auto sched = load_schedule_csv(MBCO_DATA_DIR "/fast_anneal_schedule.csv");
  EXPECT_EQ(sched.eval(0.0).coupling_ghz, 0.0);
  EXPECT_EQ(sched.eval(1.0).field_ghz, 0.0);
  const double sc = critical_s(sched, ChainSpec{8, 1.0, 0.2});
  EXPECT_GT(sc, 0.28);
  EXPECT_LT(sc, 0.38);
}

TEST(CriticalS, DegenerateScheduleThrows) {
  const auto sched = AnnealSchedule::tabulated({{0.0, 0.0, 1.0}, {0.5, 0.0, 0.5}, {1.0, 0.0, 0.0}});
  EXPECT_THROW(critical_s(sched, ChainSpec{8, 1.0, 0.0}), ConfigError);
}

}  // namespace
}  // namespace mbco
