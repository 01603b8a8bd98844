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
#include <string>

#include <gtest/gtest.h>

#include "mbco/ed_oracle.hpp"
#include "mbco/errors.hpp"
#include "mbco/observables.hpp"

namespace mbco {
namespace {

const AnnealSchedule kLinear = AnnealSchedule::linear(11.0, 15.0);

QuenchResult run_one(const ChainSpec& chain, double tau, const AnnealSchedule& s = kLinear) {
  return quench_sweep(chain, s, {tau}).front();
}

TEST(Observables, SuddenQuenchHasHalfKinks) {
  const QuenchResult r = run_one(ChainSpec{16, 1.0, 0.4}, 0.0);
  EXPECT_NEAR(r.kink_density, 0.5, 1e-12);
  EXPECT_NEAR(r.staggered_diff, 0.0, 1e-12);
  EXPECT_NEAR(r.p_strong, 0.5, 1e-12);
  EXPECT_NEAR(r.p_weak, 0.5, 1e-12);
}

TEST(Observables, UniformChainHasNoStaggering) {
  const auto rs = quench_sweep(ChainSpec{16, 1.0, 0.0}, kLinear, {0.5, 2.0, 7.0, 19.0});
  for (const auto& r : rs) EXPECT_LT(std::abs(r.staggered_diff), 1e-9);
}

TEST(Observables, AdiabaticLimitIsKinkFree) {
  EXPECT_LT(run_one(ChainSpec{16, 1.0, 0.5}, 200.0).kink_density, 1e-3);
}

TEST(Observables, ProbabilityBounds) {
  for (double tau : {0.3, 2.0, 9.0}) {
    const QuenchResult r = run_one(ChainSpec{16, 1.0, 0.3}, tau);
    EXPECT_GE(r.kink_density, 0.0);
    EXPECT_LE(r.kink_density, 1.0);
    EXPECT_LE(std::abs(r.staggered_diff), r.kink_density + 1e-12);
    EXPECT_NEAR(r.kink_density, 0.5 * (r.p_strong + r.p_weak), 1e-12);
    EXPECT_NEAR(r.staggered_diff, 0.5 * (r.p_weak - r.p_strong), 1e-12);
  }
}

TEST(Observables, StrongBondsCarryFewerKinks) {
  const auto rs = quench_sweep(ChainSpec{16, 1.0, 0.4}, kLinear, {5.0, 10.0, 15.0, 20.0});
  double mean = 0.0;
  for (const auto& r : rs) mean += r.staggered_diff / rs.size();
  EXPECT_GT(mean, 0.0);
}

TEST(Observables, StrongBondLabelFollowsParity) {
  ChainSpec even{16, 1.0, 0.3};
  ChainSpec odd = even;
  odd.strong_bond_parity = BondParity::kOdd;
  const QuenchResult a = run_one(even, 3.0);
  const QuenchResult b = run_one(odd, 3.0);
  EXPECT_NEAR(a.kink_density, b.kink_density, 1e-10);
  EXPECT_NEAR(a.staggered_diff, b.staggered_diff, 1e-10);
  EXPECT_NEAR(a.p_strong, b.p_strong, 1e-10);
}

TEST(Observables, MatchesDenseOracleSmallRings) {
  for (int n : {4, 8}) {
    ChainSpec chain{n, 1.0, 0.4};
    const QuenchResult r = run_one(chain, 3.0);
    DenseQuenchProblem p{chain, {}, kLinear, 3.0};
    const EdObservables ed = ed_observables(ed_evolve(p).state, chain);
    EXPECT_NEAR(r.kink_density, ed.kink_density, 1e-6) << "n=" << n;
    EXPECT_NEAR(r.staggered_diff, ed.staggered_diff, 1e-6) << "n=" << n;
  }
}

TEST(Observables, UniformChainDefectsDecreaseWithTau) {
  std::vector<double> taus;
  for (int i = 0; i < 10; ++i) taus.push_back(5.0 + 5.0 * i);
  const auto rs = quench_sweep(ChainSpec{40, 1.0, 0.0}, kLinear, taus);
  for (std::size_t i = 1; i < rs.size(); ++i) EXPECT_LT(rs[i].kink_density, rs[i - 1].kink_density);
}

TEST(Sweep, SinglePointAndValidation) {
  const ChainSpec chain{8, 1.0, 0.2};
  EXPECT_EQ(quench_sweep(chain, kLinear, {4.0}).size(), 1u);
  EXPECT_THROW(quench_sweep(chain, kLinear, {}), ConfigError);
  EXPECT_THROW(quench_sweep(chain, kLinear, {2.0, 1.0}), ConfigError);
  EXPECT_THROW(quench_sweep(chain, kLinear, {-1.0}), ConfigError);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const ChainSpec chain{16, 1.0, 0.3};
  SweepOptions one, four;
  four.threads = 4;
  const std::vector<double> taus{1.0, 2.0, 3.0, 4.0, 5.0};
  const auto a = quench_sweep(chain, kLinear, taus, one);
  const auto b = quench_sweep(chain, kLinear, taus, four);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].kink_density, b[i].kink_density);
    EXPECT_EQ(a[i].staggered_diff, b[i].staggered_diff);
  }
}

TEST(Sweep, CleanDisorderMatchesCleanPath) {
  const ChainSpec chain{16, 1.0, 0.3};
  SweepOptions dis;
  dis.disorder = DisorderOptions{0.0, 5, 3};
  const auto clean = quench_sweep(chain, kLinear, {2.0, 6.0});
  const auto avg = quench_sweep(chain, kLinear, {2.0, 6.0}, dis);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    EXPECT_NEAR(avg[i].kink_density, clean[i].kink_density, 1e-9);
    EXPECT_NEAR(avg[i].staggered_diff, clean[i].staggered_diff, 1e-9);
    EXPECT_EQ(avg[i].realizations, 5);
    EXPECT_LT(avg[i].kink_stderr, 1e-9);
  }
}

TEST(Sweep, DisorderGivesNonzeroSpread) {
  SweepOptions dis;
  dis.disorder = DisorderOptions{0.5, 4, 11};
  const auto r = quench_sweep(ChainSpec{16, 1.0, 0.3}, kLinear, {3.0}, dis).front();
  EXPECT_GT(r.kink_stderr, 0.0);
  EXPECT_GT(r.staggered_stderr, 0.0);
}

TEST(Sweep, NumericalFailureNamesTau) {
  SweepOptions opt;
  opt.evolve.tol = 1e-2;
  opt.evolve.max_norm_drift = 1e-15;
  try {
    quench_sweep(ChainSpec{8, 1.0, 0.3}, kLinear, {12.5}, opt);
    FAIL() << "expected a numerical failure";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("tau=12.5"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("k="), std::string::npos);
  }
}

TEST(KzFit, ExactPowerLaw) {
  std::vector<QuenchResult> rs;
  for (double tau : {10.0, 20.0, 40.0, 60.0, 80.0, 100.0}) {
    QuenchResult q;
    q.tau_ns = tau;
    q.kink_density = 0.3 / std::sqrt(tau);
    rs.push_back(q);
  }
  const KzFit fit = kz_fit(rs, 10.0, 100.0);
  EXPECT_NEAR(fit.exponent, -0.5, 1e-12);
  EXPECT_NEAR(fit.amplitude, 0.3, 1e-12);
  EXPECT_NEAR(fit.r2, 1.0, 1e-12);
  EXPECT_EQ(fit.points, 6);
}

TEST(KzFit, FlatDataAndErrors) {
  std::vector<QuenchResult> rs;
  for (int i = 1; i <= 6; ++i) {
    QuenchResult q;
    q.tau_ns = 10.0 * i;
    q.kink_density = 0.05;
    rs.push_back(q);
  }
  EXPECT_NEAR(kz_fit(rs, 0.0, 100.0).exponent, 0.0, 1e-12);
  EXPECT_THROW(kz_fit(rs, 0.0, 35.0), ConfigError);
  rs[2].kink_density = 0.0;
  EXPECT_THROW(kz_fit(rs, 0.0, 100.0), ConfigError);
}

}  // namespace
}  // namespace mbco
