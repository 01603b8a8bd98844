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

#ifndef MBCO_SHOTS_HPP
#define MBCO_SHOTS_HPP

#include <cstdint>
#include <vector>

#include "mbco/chain.hpp"
#include "mbco/observables.hpp"
#include "mbco/spectral.hpp"

namespace mbco {

/// Kink indicators of repeated anneals at one tau: row = shot, column = bond.
/// Bonds are drawn as independent Bernoulli variables with the per-sublattice
/// probabilities; inter-bond correlations of the quantum state are ignored.
struct ShotTable {
  double tau_ns = 0.0;
  int shots = 0;
  int bonds = 0;
  std::vector<std::uint8_t> kinks;

  std::uint8_t at(int shot, int bond) const {
    return kinks[static_cast<std::size_t>(shot) * bonds + bond];
  }
};

/// Deterministic in (seed, stream).
ShotTable simulate_shot_table(const QuenchResult& result, const ChainSpec& chain, int shots,
                              std::uint64_t seed, std::uint64_t stream = 0);

/// One table per result; stream = position in the list.
std::vector<ShotTable> simulate_shots(const std::vector<QuenchResult>& results,
                                      const ChainSpec& chain, int shots, std::uint64_t seed,
                                      int threads = 1);

/// Per-shot estimate (weak kinks - strong kinks) / N, on the grid k / N.
std::vector<double> shot_staggered_diffs(const ShotTable& table, const ChainSpec& chain);

/// Full-sample estimate of P.
double empirical_staggered_diff(const ShotTable& table, const ChainSpec& chain);

/// P estimates of the artificial series: values[t][g] belongs to tau index t
/// and group g, formed from sizes[t][g] shots.
struct GroupEstimates {
  std::vector<double> tau_ns;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<int>> sizes;

  int n_series() const { return values.empty() ? 0 : static_cast<int>(values.front().size()); }
  /// Size-weighted group mean per tau, i.e. the full-sample series.
  TauSeries pooled() const;
};

/// Shuffles the shots of each table and deals them round-robin into n_series
/// groups. Every tau needs at least n_series shots.
GroupEstimates partition_shots(const std::vector<ShotTable>& tables, const ChainSpec& chain,
                               int n_series, std::uint64_t seed, int threads = 1);

/// Same distribution as simulate_shots followed by partition_shots, without
/// materialising the tables: a group of g shots has Binomial(g N/2, p) kinks
/// per sublattice, so each (tau, group) needs two draws.
GroupEstimates sample_group_estimates(const std::vector<QuenchResult>& results,
                                      const ChainSpec& chain, int shots, int n_series,
                                      std::uint64_t seed, int threads = 1);

struct NoiseEstimate {
  std::vector<double> omega_ghz;
  /// Standard deviation of the artificial-series spectra.
  std::vector<double> sigma_series;
  /// sigma_series / sqrt(n_series): noise of the spectrum of the pooled series.
  std::vector<double> sigma;
  int n_series = 0;
  double shots_per_series = 0.0;
};

/// Spectra of every artificial series under `options`; per-bin standard deviation.
NoiseEstimate bootstrap_spectra(const GroupEstimates& groups, const SpectrumOptions& options,
                                int threads = 1);

/// partition_shots followed by bootstrap_spectra.
NoiseEstimate bootstrap_noise(const std::vector<ShotTable>& tables, const ChainSpec& chain,
                              int n_series, const SpectrumOptions& options, std::uint64_t seed,
                              int threads = 1);

/// Attaches noise.sigma to a spectrum computed on the same window.
void attach_noise(Spectrum& spec, const NoiseEstimate& noise);

}  // namespace mbco

#endif  // MBCO_SHOTS_HPP
