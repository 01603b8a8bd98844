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


#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mbco/errors.hpp"
#include "mbco/shots.hpp"

namespace mbco {
namespace {

QuenchResult probs(double tau, double ps, double pw) {
  QuenchResult q;
  q.tau_ns = tau;
  q.p_strong = ps;
  q.p_weak = pw;
  q.kink_density = 0.5 * (ps + pw);
  q.staggered_diff = 0.5 * (pw - ps);
  return q;
}

std::vector<QuenchResult> flat_series(std::size_t m, double ps, double pw) {
  std::vector<QuenchResult> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(probs(5.0 + 0.02 * i, ps, pw));
  return out;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

TEST(Shots, ZeroProbabilityGivesEmptyTable) {
  const ChainSpec chain{16, 1.0, 0.3};
  const ShotTable t = simulate_shot_table(probs(1.0, 0.0, 0.0), chain, 100, 1);
  EXPECT_EQ(t.bonds, 16);
  for (auto k : t.kinks) EXPECT_EQ(k, 0);
  EXPECT_EQ(empirical_staggered_diff(t, chain), 0.0);
}

TEST(Shots, SingleShotIsOnAttainableGrid) {
  const ChainSpec chain{16, 1.0, 0.3};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double p = empirical_staggered_diff(simulate_shot_table(probs(1.0, 0.3, 0.6), chain, 1, seed), chain);
    EXPECT_GE(p, -0.5);
    EXPECT_LE(p, 0.5);
    EXPECT_NEAR(p * 16, std::round(p * 16), 1e-12);
  }
}

TEST(Shots, EstimatorConvergesAtInverseRootRate) {
  const ChainSpec chain{16, 1.0, 0.3};
  const QuenchResult q = probs(1.0, 0.2, 0.35);
  std::vector<double> rms;
  for (int shots : {1000, 10000, 100000}) {
    double acc = 0.0;
    const int reps = 40;
    for (int r = 0; r < reps; ++r) {
      const double e = empirical_staggered_diff(simulate_shot_table(q, chain, shots, 7, r), chain) -
                       q.staggered_diff;
      acc += e * e;
    }
    rms.push_back(std::sqrt(acc / reps));
  }
  EXPECT_NEAR(std::log10(rms[0] / rms[2]), 1.0, 0.25);
  EXPECT_GT(rms[0], rms[1]);
  EXPECT_GT(rms[1], rms[2]);
}

TEST(Shots, RejectsBadInputs) {
  const ChainSpec chain{8, 1.0, 0.3};
  EXPECT_THROW(simulate_shot_table(probs(1.0, 0.2, 0.2), chain, 0, 1), ConfigError);
  EXPECT_THROW(simulate_shot_table(probs(1.0, 1.2, 0.2), chain, 10, 1), ConfigError);
}

TEST(Partition, PreservesTotals) {
  const ChainSpec chain{16, 1.0, 0.3};
  const auto tables = simulate_shots(flat_series(12, 0.2, 0.3), chain, 1003, 5);
  const GroupEstimates ge = partition_shots(tables, chain, 10, 9);
  const TauSeries pooled = ge.pooled();
  for (std::size_t t = 0; t < tables.size(); ++t) {
    EXPECT_NEAR(pooled.values[t], empirical_staggered_diff(tables[t], chain), 1e-14);
    int total = 0;
    for (int s : ge.sizes[t]) total += s;
    EXPECT_EQ(total, 1003);
  }
  EXPECT_THROW(partition_shots(tables, chain, 2000, 1), ConfigError);
}

TEST(Bootstrap, IdenticalShotsGiveZeroNoise) {
  const ChainSpec chain{16, 1.0, 0.3};
  const auto tables = simulate_shots(flat_series(32, 1.0, 0.0), chain, 400, 1);
  SpectrumOptions opt;
  const NoiseEstimate ne = bootstrap_noise(tables, chain, 20, opt, 3);
  for (double s : ne.sigma) EXPECT_EQ(s, 0.0);
}

TEST(Bootstrap, NoiseFollowsShotCount) {
  const ChainSpec chain{160, 1.0, 0.3};
  const auto series = flat_series(200, 0.1, 0.15);
  SpectrumOptions opt;
  std::vector<double> med;
  for (int per_series : {1000, 4000}) {
    const int n_series = 100;
    const auto ge = sample_group_estimates(series, chain, per_series * n_series, n_series, 17);
    med.push_back(median(bootstrap_spectra(ge, opt).sigma_series));
  }
  EXPECT_NEAR(med[0] / med[1], 2.0, 0.2);
}

TEST(Bootstrap, SeedStability) {
  const ChainSpec chain{160, 1.0, 0.3};
  const auto series = flat_series(200, 0.1, 0.15);
  SpectrumOptions opt;
  const auto a = bootstrap_spectra(sample_group_estimates(series, chain, 10000, 1000, 1), opt);
  const auto b = bootstrap_spectra(sample_group_estimates(series, chain, 10000, 1000, 2), opt);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 1; i < a.sigma.size(); ++i) {
    num += std::pow(a.sigma[i] - b.sigma[i], 2);
    den += a.sigma[i] * a.sigma[i];
  }
  EXPECT_LT(std::sqrt(num / den), 0.05);
}

TEST(Bootstrap, ThreadCountDoesNotChangeNoise) {
  const ChainSpec chain{40, 1.0, 0.3};
  const auto series = flat_series(64, 0.1, 0.2);
  SpectrumOptions opt;
  const auto ge1 = sample_group_estimates(series, chain, 5000, 50, 4, 1);
  const auto ge3 = sample_group_estimates(series, chain, 5000, 50, 4, 3);
  EXPECT_EQ(ge1.values, ge3.values);
  EXPECT_EQ(bootstrap_spectra(ge1, opt, 1).sigma, bootstrap_spectra(ge3, opt, 3).sigma);
}

TEST(Bootstrap, GroupedEstimatesAreUnbiased) {
  const ChainSpec chain{160, 1.0, 0.3};
  const auto series = flat_series(50, 0.1, 0.16);
  const auto ge = sample_group_estimates(series, chain, 75000, 100, 8);
  const TauSeries pooled = ge.pooled();
  double mean = 0.0;
  for (double v : pooled.values) mean += v / pooled.size();
  // Per-tau standard error ~ sqrt(0.25 / (75000 * 160)) ~ 1.4e-4.
  EXPECT_NEAR(mean, 0.03, 1e-4);
}

TEST(Bootstrap, AttachChecksGrid) {
  Spectrum spec;
  spec.omega_ghz = {0.0, 1.0};
  spec.amplitude = {0.0, 0.0};
  NoiseEstimate ne;
  ne.omega_ghz = {0.0, 1.5};
  ne.sigma = {0.1, 0.1};
  EXPECT_THROW(attach_noise(spec, ne), ConfigError);
  ne.omega_ghz = {0.0, 1.0};
  attach_noise(spec, ne);
  EXPECT_EQ(spec.sigma, ne.sigma);
}

}  // namespace
}  // namespace mbco
