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

#include "mbco/shots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mbco/errors.hpp"
#include "mbco/parallel.hpp"
#include "mbco/rng.hpp"

namespace mbco {
namespace {

constexpr std::uint32_t kShotSalt = 0x5407u;
constexpr std::uint32_t kPartitionSalt = 0x9a27u;
constexpr std::uint32_t kGroupSalt = 0x6209u;
constexpr std::size_t kSeriesChunk = 32;

void check_probabilities(const QuenchResult& r) {
  if (!(r.p_strong >= 0.0 && r.p_strong <= 1.0 && r.p_weak >= 0.0 && r.p_weak <= 1.0)) {
    throw ConfigError("kink probabilities must lie in [0, 1]");
  }
}

// Running mean / M2 per bin, merged in a fixed order for thread-independent output.
struct Moments {
  double count = 0.0;
  std::vector<double> mean;
  std::vector<double> m2;

  explicit Moments(std::size_t bins) : mean(bins, 0.0), m2(bins, 0.0) {}

  void add(const std::vector<double>& x) {
    count += 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double delta = x[i] - mean[i];
      mean[i] += delta / count;
      m2[i] += delta * (x[i] - mean[i]);
    }
  }

  void merge(const Moments& o) {
    if (o.count == 0.0) return;
    const double total = count + o.count;
    for (std::size_t i = 0; i < mean.size(); ++i) {
      const double delta = o.mean[i] - mean[i];
      mean[i] += delta * o.count / total;
      m2[i] += o.m2[i] + delta * delta * count * o.count / total;
    }
    count = total;
  }
};

}  // namespace

ShotTable simulate_shot_table(const QuenchResult& result, const ChainSpec& chain, int shots,
                              std::uint64_t seed, std::uint64_t stream) {
  chain.validate();
  if (shots < 1) throw ConfigError("shots must be >= 1");
  check_probabilities(result);
  ShotTable t;
  t.tau_ns = result.tau_ns;
  t.shots = shots;
  t.bonds = chain.n;
  t.kinks.resize(static_cast<std::size_t>(shots) * chain.n);
  std::vector<double> p(chain.n);
  for (int b = 0; b < chain.n; ++b) p[b] = chain.is_strong(b) ? result.p_strong : result.p_weak;
  std::mt19937_64 rng = make_rng(seed, stream, kShotSalt);
  std::size_t idx = 0;
  for (int s = 0; s < shots; ++s) {
    for (int b = 0; b < chain.n; ++b) {
      t.kinks[idx++] = unit_uniform(rng) < p[b] ? 1 : 0;
    }
  }
  return t;
}

std::vector<ShotTable> simulate_shots(const std::vector<QuenchResult>& results,
                                      const ChainSpec& chain, int shots, std::uint64_t seed,
                                      int threads) {
  std::vector<ShotTable> out(results.size());
  parallel_for(results.size(), threads, [&](std::size_t i) {
    out[i] = simulate_shot_table(results[i], chain, shots, seed, i);
  });
  return out;
}

std::vector<double> shot_staggered_diffs(const ShotTable& table, const ChainSpec& chain) {
  if (table.bonds != chain.n) throw ConfigError("shot table width differs from chain length");
  std::vector<double> out(table.shots);
  for (int s = 0; s < table.shots; ++s) {
    int diff = 0;
    for (int b = 0; b < table.bonds; ++b) {
      diff += chain.is_strong(b) ? -table.at(s, b) : table.at(s, b);
    }
    out[s] = static_cast<double>(diff) / chain.n;
  }
  return out;
}

double empirical_staggered_diff(const ShotTable& table, const ChainSpec& chain) {
  const std::vector<double> per_shot = shot_staggered_diffs(table, chain);
  return std::accumulate(per_shot.begin(), per_shot.end(), 0.0) / static_cast<double>(per_shot.size());
}

TauSeries GroupEstimates::pooled() const {
  TauSeries s;
  s.meta = "P";
  s.tau_ns = tau_ns;
  s.values.resize(values.size());
  for (std::size_t t = 0; t < values.size(); ++t) {
    double acc = 0.0;
    long total = 0;
    for (std::size_t g = 0; g < values[t].size(); ++g) {
      acc += values[t][g] * sizes[t][g];
      total += sizes[t][g];
    }
    s.values[t] = acc / static_cast<double>(total);
  }
  return s;
}

GroupEstimates partition_shots(const std::vector<ShotTable>& tables, const ChainSpec& chain,
                               int n_series, std::uint64_t seed, int threads) {
  if (n_series < 1) throw ConfigError("n_series must be >= 1");
  GroupEstimates ge;
  ge.tau_ns.resize(tables.size());
  ge.values.assign(tables.size(), std::vector<double>(n_series, 0.0));
  ge.sizes.assign(tables.size(), std::vector<int>(n_series, 0));
  for (const ShotTable& t : tables) {
    if (t.shots < n_series) throw ConfigError("fewer shots than artificial series at some tau");
  }
  parallel_for(tables.size(), threads, [&](std::size_t t) {
    const ShotTable& table = tables[t];
    ge.tau_ns[t] = table.tau_ns;
    const std::vector<double> per_shot = shot_staggered_diffs(table, chain);
    std::vector<int> order(table.shots);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng = make_rng(seed, t, kPartitionSalt);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double>& sums = ge.values[t];
    std::vector<int>& sizes = ge.sizes[t];
    for (int pos = 0; pos < table.shots; ++pos) {
      const int g = pos % n_series;
      sums[g] += per_shot[order[pos]];
      ++sizes[g];
    }
    for (int g = 0; g < n_series; ++g) sums[g] /= sizes[g];
  });
  return ge;
}

GroupEstimates sample_group_estimates(const std::vector<QuenchResult>& results,
                                      const ChainSpec& chain, int shots, int n_series,
                                      std::uint64_t seed, int threads) {
  chain.validate();
  if (n_series < 1) throw ConfigError("n_series must be >= 1");
  if (shots < n_series) throw ConfigError("fewer shots than artificial series");
  for (const QuenchResult& r : results) check_probabilities(r);
  const int half = chain.n / 2;
  GroupEstimates ge;
  ge.tau_ns.resize(results.size());
  ge.values.assign(results.size(), std::vector<double>(n_series, 0.0));
  ge.sizes.assign(results.size(), std::vector<int>(n_series, 0));
  parallel_for(results.size(), threads, [&](std::size_t t) {
    const QuenchResult& r = results[t];
    ge.tau_ns[t] = r.tau_ns;
    std::mt19937_64 rng = make_rng(seed, t, kGroupSalt);
    for (int g = 0; g < n_series; ++g) {
      const int size = shots / n_series + (g < shots % n_series ? 1 : 0);
      std::binomial_distribution<long> strong(static_cast<long>(size) * half, r.p_strong);
      std::binomial_distribution<long> weak(static_cast<long>(size) * half, r.p_weak);
      const long ks = strong(rng);
      const long kw = weak(rng);
      ge.sizes[t][g] = size;
      ge.values[t][g] = static_cast<double>(kw - ks) / (static_cast<double>(size) * chain.n);
    }
  });
  return ge;
}

NoiseEstimate bootstrap_spectra(const GroupEstimates& groups, const SpectrumOptions& options,
                                int threads) {
  const int n_series = groups.n_series();
  if (n_series < 2) throw ConfigError("bootstrap needs at least two artificial series");
  TauSeries probe;
  probe.tau_ns = groups.tau_ns;
  probe.values.assign(groups.tau_ns.size(), 0.0);
  const Spectrum layout = analyze_series(probe, options);
  const std::size_t bins = layout.size();
  const std::size_t length = layout.samples;

  const std::size_t chunks = (static_cast<std::size_t>(n_series) + kSeriesChunk - 1) / kSeriesChunk;
  std::vector<Moments> partial(chunks, Moments(bins));
  parallel_for(chunks, threads, [&](std::size_t c) {
    RealDft dft(length);
    TauSeries series;
    series.tau_ns = groups.tau_ns;
    series.values.resize(groups.tau_ns.size());
    std::vector<double> mag(bins);
    const std::size_t lo = c * kSeriesChunk;
    const std::size_t hi = std::min<std::size_t>(lo + kSeriesChunk, n_series);
    for (std::size_t g = lo; g < hi; ++g) {
      for (std::size_t t = 0; t < series.values.size(); ++t) series.values[t] = groups.values[t][g];
      const TauSeries w = detrend_and_window(series, options.window_lo_ns, options.window_hi_ns,
                                             options.detrend);
      dft.magnitudes(w.values.data(), mag.data());
      partial[c].add(mag);
    }
  });
  Moments total(bins);
  for (const Moments& m : partial) total.merge(m);

  NoiseEstimate ne;
  ne.omega_ghz = layout.omega_ghz;
  ne.n_series = n_series;
  ne.sigma_series.resize(bins);
  ne.sigma.resize(bins);
  const double root_n = std::sqrt(static_cast<double>(n_series));
  for (std::size_t i = 0; i < bins; ++i) {
    ne.sigma_series[i] = std::sqrt(std::max(0.0, total.m2[i] / (total.count - 1.0)));
    ne.sigma[i] = ne.sigma_series[i] / root_n;
  }
  double shots = 0.0;
  for (const auto& row : groups.sizes) {
    shots += static_cast<double>(std::accumulate(row.begin(), row.end(), 0L));
  }
  ne.shots_per_series = shots / (static_cast<double>(groups.sizes.size()) * n_series);
  return ne;
}

NoiseEstimate bootstrap_noise(const std::vector<ShotTable>& tables, const ChainSpec& chain,
                              int n_series, const SpectrumOptions& options, std::uint64_t seed,
                              int threads) {
  return bootstrap_spectra(partition_shots(tables, chain, n_series, seed, threads), options, threads);
}

void attach_noise(Spectrum& spec, const NoiseEstimate& noise) {
  if (noise.sigma.size() != spec.size()) throw ConfigError("noise estimate does not match the spectrum grid");
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (std::abs(noise.omega_ghz[i] - spec.omega_ghz[i]) > 1e-9 * (1.0 + spec.omega_ghz[i])) {
      throw ConfigError("noise estimate does not match the spectrum grid");
    }
  }
  spec.sigma = noise.sigma;
}

}  // namespace mbco
