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

#include "mbco/shim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "mbco/errors.hpp"
#include "mbco/parallel.hpp"
#include "mbco/rng.hpp"

namespace mbco {
namespace {

constexpr std::uint32_t kSamplerSalt = 0x3e7au;
constexpr std::uint32_t kGaugeSalt = 0x6a06u;

std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index) {
  return seed * 0x9E3779B97F4A7C15ull + index;
}

double mean_of(const std::vector<double>& v, const std::vector<int>& idx) {
  double acc = 0.0;
  for (int i : idx) acc += v[i];
  return acc / static_cast<double>(idx.size());
}

double std_of(const std::vector<double>& v, const std::vector<int>& idx) {
  const double m = mean_of(v, idx);
  double acc = 0.0;
  for (int i : idx) acc += (v[i] - m) * (v[i] - m);
  return std::sqrt(acc / static_cast<double>(idx.size()));
}

}  // namespace

int OrbitPartition::qubit_orbit_of(int qubit) const {
  for (std::size_t o = 0; o < qubit_orbits.size(); ++o) {
    if (std::find(qubit_orbits[o].begin(), qubit_orbits[o].end(), qubit) != qubit_orbits[o].end()) {
      return static_cast<int>(o);
    }
  }
  throw ConfigError("qubit not covered by any orbit");
}

int OrbitPartition::coupler_orbit_of(int bond) const {
  for (std::size_t o = 0; o < coupler_orbits.size(); ++o) {
    if (std::find(coupler_orbits[o].begin(), coupler_orbits[o].end(), bond) != coupler_orbits[o].end()) {
      return static_cast<int>(o);
    }
  }
  throw ConfigError("coupler not covered by any orbit");
}

OrbitPartition build_orbits(const ChainSpec& chain) {
  chain.validate();
  OrbitPartition p;
  p.qubit_orbits.resize(2);
  p.coupler_orbits.resize(2);
  for (int i = 0; i < chain.n; ++i) {
    p.qubit_orbits[i % 2].push_back(i);
    p.coupler_orbits[chain.is_strong(i) ? 0 : 1].push_back(i);
  }
  return p;
}

void IsingProblem::validate() const {
  const std::size_t n = h.size();
  if (n < 2) throw ConfigError("problem needs at least two qubits");
  if (j.size() != n || flux.size() != n) throw ConfigError("problem arrays must all have one entry per qubit");
}

void NoisySamplerConfig::validate(int n) const {
  if (!(t_eff > 0.0)) throw ConfigError("t_eff must be > 0");
  if (sweeps < 1) throw ConfigError("sweeps must be >= 1");
  if (!hidden_bias.empty() && static_cast<int>(hidden_bias.size()) != n) {
    throw ConfigError("hidden_bias length differs from chain length");
  }
  if (!coupler_error.empty() && static_cast<int>(coupler_error.size()) != n) {
    throw ConfigError("coupler_error length differs from chain length");
  }
}

double ising_energy(const IsingProblem& problem, const std::vector<std::int8_t>& spins) {
  const int n = problem.size();
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    e += problem.j[i] * spins[i] * spins[(i + 1) % n];
    e -= (problem.h[i] + problem.flux[i]) * spins[i];
  }
  return e;
}

NoisySamplerConfig random_faults(int n, double bias_amplitude, double coupler_amplitude,
                                 std::uint64_t seed) {
  if (n < 1) throw ConfigError("chain length must be positive");
  if (!(bias_amplitude >= 0.0) || !(coupler_amplitude >= 0.0)) {
    throw ConfigError("fault amplitudes must be >= 0");
  }
  if (coupler_amplitude >= 1.0) throw ConfigError("coupler error amplitude must be < 1");
  auto rng = make_rng(seed, 0, 0xfa17);
  NoisySamplerConfig cfg;
  cfg.seed = seed;
  cfg.hidden_bias.resize(n);
  cfg.coupler_error.resize(n);
  for (double& b : cfg.hidden_bias) b = bias_amplitude * (2.0 * unit_uniform(rng) - 1.0);
  for (double& c : cfg.coupler_error) c = coupler_amplitude * (2.0 * unit_uniform(rng) - 1.0);
  return cfg;
}

SampleSet noisy_sampler(const IsingProblem& problem, const NoisySamplerConfig& config, int shots,
                        std::uint64_t stream) {
  problem.validate();
  const int n = problem.size();
  config.validate(n);
  if (shots < 1) throw ConfigError("shots must be >= 1");

  std::vector<double> j(n), field(n);
  for (int i = 0; i < n; ++i) {
    j[i] = problem.j[i] * (config.coupler_error.empty() ? 1.0 : 1.0 + config.coupler_error[i]);
    field[i] = problem.h[i] + problem.flux[i] + (config.hidden_bias.empty() ? 0.0 : config.hidden_bias[i]);
  }
  const double beta = std::isinf(config.t_eff) ? 0.0 : 1.0 / config.t_eff;

  SampleSet out;
  out.n = n;
  out.shots = shots;
  out.spins.resize(static_cast<std::size_t>(shots) * n);
  out.gauges.assign(1, std::vector<std::int8_t>(n, 1));
  out.gauge_of_shot.assign(shots, 0);

  std::mt19937_64 rng = make_rng(config.seed, stream, kSamplerSalt);
  std::vector<std::int8_t> s(n);
  for (int shot = 0; shot < shots; ++shot) {
    for (auto& v : s) v = (rng() >> 63) ? 1 : -1;
    for (int sweep = 0; sweep < config.sweeps; ++sweep) {
      // Random site order: a fixed sweep lets domain-wall pairs drift in lockstep at T -> 0.
      for (int step = 0; step < n; ++step) {
        const int i = static_cast<int>(unit_uniform(rng) * n);
        const int left = (i + n - 1) % n;
        const int right = (i + 1) % n;
        const double local = j[left] * s[left] + j[i] * s[right] - field[i];
        const double de = -2.0 * s[i] * local;
        if (de <= 0.0 || unit_uniform(rng) < std::exp(-beta * de)) s[i] = static_cast<std::int8_t>(-s[i]);
      }
    }
    std::copy(s.begin(), s.end(), out.spins.begin() + static_cast<std::ptrdiff_t>(shot) * n);
  }
  return out;
}

SampleSet gauge_sample(const IsingProblem& problem, const NoisySamplerConfig& config,
                       int n_gauges, int shots, std::uint64_t seed, int threads) {
  problem.validate();
  const int n = problem.size();
  if (n_gauges < 1) throw ConfigError("n_gauges must be >= 1");
  if (shots < n_gauges) throw ConfigError("need at least one shot per gauge");

  std::vector<std::vector<std::int8_t>> gauges(n_gauges, std::vector<std::int8_t>(n, 1));
  if (n_gauges > 1) {
    std::mt19937_64 rng = make_rng(seed, 0, kGaugeSalt);
    for (auto& g : gauges) {
      for (auto& v : g) v = (rng() >> 63) ? 1 : -1;
    }
  }

  std::vector<SampleSet> parts(n_gauges);
  parallel_for(n_gauges, threads, [&](std::size_t gi) {
    const auto& g = gauges[gi];
    IsingProblem gauged = problem;
    for (int i = 0; i < n; ++i) {
      gauged.j[i] = problem.j[i] * g[i] * g[(i + 1) % n];
      gauged.h[i] = problem.h[i] * g[i];
    }
    const int count = shots / n_gauges + (static_cast<int>(gi) < shots % n_gauges ? 1 : 0);
    try {
      parts[gi] = noisy_sampler(gauged, config, count, mix_stream(seed, gi));
    } catch (const std::exception& e) {
      throw NumericalError("sampler failed in gauge " + std::to_string(gi) + ": " + e.what());
    }
  });

  SampleSet out;
  out.n = n;
  out.shots = shots;
  out.gauges = gauges;
  out.spins.reserve(static_cast<std::size_t>(shots) * n);
  for (int gi = 0; gi < n_gauges; ++gi) {
    const SampleSet& part = parts[gi];
    for (int shot = 0; shot < part.shots; ++shot) {
      for (int i = 0; i < n; ++i) {
        out.spins.push_back(static_cast<std::int8_t>(part.spin(shot, i) * gauges[gi][i]));
      }
      out.gauge_of_shot.push_back(gi);
    }
  }
  return out;
}

double frustration_prob(const SampleSet& samples, int i, int j, double coupling) {
  if (coupling == 0.0) throw ConfigError("frustration probability is undefined for a zero coupler");
  if (samples.shots < 1) throw ConfigError("frustration probability needs samples");
  long corr = 0;
  for (int shot = 0; shot < samples.shots; ++shot) corr += samples.spin(shot, i) * samples.spin(shot, j);
  const double zz = static_cast<double>(corr) / samples.shots;
  return 0.5 * (1.0 + (coupling > 0.0 ? zz : -zz));
}

ShimStats shim_statistics(const SampleSet& samples, const std::vector<double>& j_prog,
                          const OrbitPartition& orbits) {
  const int n = samples.n;
  if (static_cast<int>(j_prog.size()) != n) throw ConfigError("coupler count differs from qubit count");
  ShimStats st;
  st.m_qubit.assign(n, 0.0);
  for (int shot = 0; shot < samples.shots; ++shot) {
    for (int i = 0; i < n; ++i) st.m_qubit[i] += samples.device_spin(shot, i);
  }
  for (double& m : st.m_qubit) m /= samples.shots;
  st.p_frust.resize(n);
  for (int b = 0; b < n; ++b) st.p_frust[b] = frustration_prob(samples, b, (b + 1) % n, j_prog[b]);
  for (const auto& orbit : orbits.qubit_orbits) st.m_orbit.push_back(mean_of(st.m_qubit, orbit));
  for (const auto& orbit : orbits.coupler_orbits) st.std_pfrust.push_back(std_of(st.p_frust, orbit));
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  st.sigma_mtilde = std_of(st.m_qubit, all);
  return st;
}

FluxUpdate parse_flux_update(const std::string& text) {
  if (text == "orbit") return FluxUpdate::kOrbit;
  if (text == "qubit") return FluxUpdate::kPerQubit;
  throw ConfigError("flux update mode must be orbit or qubit");
}

std::string to_string(FluxUpdate mode) { return mode == FluxUpdate::kOrbit ? "orbit" : "qubit"; }

ShimState shim_step(const ShimState& state, const ShimStats& stats, const OrbitPartition& orbits,
                    FluxUpdate mode) {
  ShimState next = state;
  for (std::size_t o = 0; o < orbits.qubit_orbits.size(); ++o) {
    for (int i : orbits.qubit_orbits[o]) {
      const double m = mode == FluxUpdate::kOrbit ? stats.m_orbit[o] : stats.m_qubit[i];
      next.phi[i] = state.phi[i] - state.eta_phi * m;
    }
  }
  for (const auto& orbit : orbits.coupler_orbits) {
    const double mean_p = mean_of(stats.p_frust, orbit);
    for (int b : orbit) {
      const double delta = stats.p_frust[b] - mean_p;
      const double sign = state.j_prog[b] > 0.0 ? 1.0 : (state.j_prog[b] < 0.0 ? -1.0 : 0.0);
      next.j_prog[b] = std::clamp(state.j_prog[b] + state.eta_j * sign * delta, -1.0, 1.0);
    }
  }
  next.iteration = state.iteration + 1;
  return next;
}

void ShimConfig::validate() const {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (!(eta_phi > 0.0) || !(eta_j > 0.0)) throw ConfigError("learning rates must be > 0");
  if (shots < 1) throw ConfigError("shots must be >= 1");
  if (n_gauges < 1) throw ConfigError("n_gauges must be >= 1");
  if (shots < n_gauges) throw ConfigError("shots must be >= n_gauges");
  if (!(m_threshold > 0.0) || !(pfrust_threshold > 0.0)) throw ConfigError("thresholds must be > 0");
  if (!(j_scale > 0.0 && j_scale <= 1.0)) throw ConfigError("j_scale must lie in (0, 1]");
}

ShimResult run_shim(const ChainSpec& chain, const NoisySamplerConfig& sampler,
                    const ShimConfig& config) {
  chain.validate();
  config.validate();
  sampler.validate(chain.n);
  const OrbitPartition orbits = build_orbits(chain);

  ShimState state;
  state.eta_phi = config.eta_phi;
  state.eta_j = config.eta_j;
  state.phi.assign(chain.n, 0.0);
  state.j_prog.resize(chain.n);
  const double strongest = chain.j + chain.delta;
  for (int b = 0; b < chain.n; ++b) state.j_prog[b] = config.j_scale * chain.bond_strength(b) / strongest;

  const double sigma_limit = config.sigma_factor > 0.0
                                 ? config.sigma_factor / std::sqrt(static_cast<double>(config.shots))
                                 : std::numeric_limits<double>::infinity();
  ShimResult result;
  for (int it = 0; it < config.iterations; ++it) {
    IsingProblem problem{state.j_prog, std::vector<double>(chain.n, 0.0), state.phi};
    const SampleSet samples = gauge_sample(problem, sampler, config.n_gauges, config.shots,
                                           mix_stream(config.seed, static_cast<std::uint64_t>(it)),
                                           config.threads);
    ShimStats stats = shim_statistics(samples, state.j_prog, orbits);
    state.history.push_back({it, stats, state.phi, state.j_prog});
    result.final_stats = stats;

    bool done = stats.sigma_mtilde < sigma_limit;
    for (double m : stats.m_orbit) done = done && std::abs(m) < config.m_threshold;
    for (double s : stats.std_pfrust) done = done && s < config.pfrust_threshold;
    if (done) {
      result.converged = true;
      break;
    }
    std::vector<ShimIteration> history = std::move(state.history);
    state = shim_step(state, stats, orbits, config.mode);
    state.history = std::move(history);
  }
  result.state = std::move(state);
  return result;
}

}  // namespace mbco
