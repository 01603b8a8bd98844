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

#ifndef MBCO_SHIM_HPP
#define MBCO_SHIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mbco/chain.hpp"

namespace mbco {

/// Symmetry classes of the ring. Qubit orbit 0 = even sites, 1 = odd sites;
/// coupler orbit 0 = strong bonds, 1 = weak bonds (bond b joins b and b+1).
struct OrbitPartition {
  std::vector<std::vector<int>> qubit_orbits;
  std::vector<std::vector<int>> coupler_orbits;

  int qubit_orbit_of(int qubit) const;
  int coupler_orbit_of(int bond) const;
};

OrbitPartition build_orbits(const ChainSpec& chain);

/// Classical ring problem E(s) = sum_b J_b s_b s_{b+1} - sum_i (h_i + flux_i) s_i.
/// `flux` is a device-frame offset: spin-reversal gauges act on J and h only.
struct IsingProblem {
  std::vector<double> j;
  std::vector<double> h;
  std::vector<double> flux;

  int size() const { return static_cast<int>(h.size()); }
  void validate() const;
};

/// Simulated miscalibrated device. The sampler sees J_b (1 + coupler_error_b)
/// and an extra field hidden_bias_i, both in the device frame.
struct NoisySamplerConfig {
  std::vector<double> hidden_bias;
  std::vector<double> coupler_error;
  double t_eff = 1.0;
  int sweeps = 20;
  std::uint64_t seed = 0;

  void validate(int n) const;
};

/// Sampler with hidden biases drawn uniformly from [-bias_amplitude, bias_amplitude]
/// and relative coupler errors from [-coupler_amplitude, coupler_amplitude].
NoisySamplerConfig random_faults(int n, double bias_amplitude, double coupler_amplitude,
                                 std::uint64_t seed);

/// Spins (+1/-1) row-major by shot. gauge_of_shot indexes `gauges`; a shot's
/// device-frame spin is gauges[g][i] * spin(shot, i).
struct SampleSet {
  int n = 0;
  int shots = 0;
  std::vector<std::int8_t> spins;
  std::vector<std::vector<std::int8_t>> gauges;
  std::vector<int> gauge_of_shot;

  std::int8_t spin(int shot, int qubit) const {
    return spins[static_cast<std::size_t>(shot) * n + qubit];
  }
  std::int8_t device_spin(int shot, int qubit) const {
    return static_cast<std::int8_t>(spin(shot, qubit) * gauges[gauge_of_shot[shot]][qubit]);
  }
};

/// Single-spin-flip Metropolis at t_eff; every read starts from a uniformly
/// random state and runs `sweeps` sequential sweeps. Deterministic in
/// (config.seed, stream). t_eff = +inf accepts every move.
SampleSet noisy_sampler(const IsingProblem& problem, const NoisySamplerConfig& config, int shots,
                        std::uint64_t stream = 0);

double ising_energy(const IsingProblem& problem, const std::vector<std::int8_t>& spins);

/// Samples under n_gauges random spin-reversal gauges (gauge 0 is the identity
/// when n_gauges == 1) and returns configurations in the physical frame.
/// `shots` is split as evenly as possible across gauges.
SampleSet gauge_sample(const IsingProblem& problem, const NoisySamplerConfig& config,
                       int n_gauges, int shots, std::uint64_t seed, int threads = 1);

/// (1 + sgn(J) <s_i s_j>) / 2 over the physical-frame samples.
double frustration_prob(const SampleSet& samples, int i, int j, double coupling);

struct ShimStats {
  /// Device-frame magnetization per qubit (m-tilde).
  std::vector<double> m_qubit;
  std::vector<double> m_orbit;
  std::vector<double> p_frust;
  std::vector<double> std_pfrust;
  /// Spread of m-tilde across qubits.
  double sigma_mtilde = 0.0;
};

ShimStats shim_statistics(const SampleSet& samples, const std::vector<double>& j_prog,
                          const OrbitPartition& orbits);

enum class FluxUpdate {
  /// phi_i -= eta m_O for every i in orbit O.
  kOrbit,
  /// phi_i -= eta m_i: resolves per-qubit offsets that orbit pooling averages away.
  kPerQubit,
};
FluxUpdate parse_flux_update(const std::string& text);
std::string to_string(FluxUpdate mode);

struct ShimIteration {
  int iteration = 0;
  ShimStats stats;
  /// Parameters in force while these statistics were gathered.
  std::vector<double> phi;
  std::vector<double> j_prog;
};

struct ShimState {
  std::vector<double> phi;
  std::vector<double> j_prog;
  double eta_phi = 0.05;
  double eta_j = 0.05;
  int iteration = 0;
  std::vector<ShimIteration> history;
};

/// One proportional update. Couplers move by eta_J sgn(J) delta with
/// delta = p_frust - orbit mean, so a coupler that is frustrated more often
/// than its orbit partners is strengthened; each orbit's mean is unchanged
/// unless the [-1, 1] clamp engages.
ShimState shim_step(const ShimState& state, const ShimStats& stats, const OrbitPartition& orbits,
                    FluxUpdate mode = FluxUpdate::kPerQubit);

struct ShimConfig {
  double eta_phi = 0.05;
  double eta_j = 0.05;
  int iterations = 50;
  int shots = 10000;
  int n_gauges = 10;
  double m_threshold = 0.01;
  double pfrust_threshold = 0.01;
  /// Extra stop condition sigma_mtilde < factor / sqrt(shots); <= 0 disables it.
  double sigma_factor = 1.5;
  /// Programmed strength of the strong bonds; weak bonds scale by (J - Delta) / (J + Delta).
  double j_scale = 0.5;
  FluxUpdate mode = FluxUpdate::kPerQubit;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;
};

struct ShimResult {
  ShimState state;
  bool converged = false;
  /// Diagnostics of the last sampled iteration.
  ShimStats final_stats;
};

/// Runs gauge_sample -> statistics -> shim_step until the thresholds hold or
/// the iteration budget is spent. Non-convergence is reported, not thrown.
ShimResult run_shim(const ChainSpec& chain, const NoisySamplerConfig& sampler,
                    const ShimConfig& config);

}  // namespace mbco

#endif  // MBCO_SHIM_HPP
