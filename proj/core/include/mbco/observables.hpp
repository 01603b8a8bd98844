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

#ifndef MBCO_OBSERVABLES_HPP
#define MBCO_OBSERVABLES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mbco/block_evolution.hpp"
#include "mbco/chain.hpp"
#include "mbco/disorder.hpp"
#include "mbco/momenta.hpp"
#include "mbco/schedule.hpp"

namespace mbco {

/// Defect observables at the end of one anneal of duration tau.
///
/// p_strong / p_weak are the kink probabilities of a single strong / weak
/// bond, kink_density = (p_strong + p_weak) / 2 is the number of kinks per
/// qubit, and staggered_diff = (p_weak - p_strong) / 2 is the kink imbalance,
/// positive when strong bonds carry fewer kinks.
struct QuenchResult {
  double tau_ns = 0.0;
  double kink_density = 0.0;
  double staggered_diff = 0.0;
  double p_strong = 0.0;
  double p_weak = 0.0;
  /// Standard errors of the disorder average; zero for a single realization.
  double kink_stderr = 0.0;
  double staggered_stderr = 0.0;
  int realizations = 1;
};

/// Sum over all N bonds of <s^z_n s^z_{n+1}> and of the same correlator
/// weighted +1 on strong bonds and -1 on weak bonds.
struct BondSums {
  double total = 0.0;
  double strong_minus_weak = 0.0;
};

/// Reads both sums off the block states. The bond operators are linear pieces
/// of the block Hamiltonian, so each block contributes <psi|H_k(1,0,0)|psi>
/// and <psi|H_k(0,1,0)|psi>.
BondSums bond_correlation_sums(const std::vector<BlockState>& states, const ChainSpec& chain);

double kink_density(const std::vector<BlockState>& states, const ChainSpec& chain);
double staggered_kink_diff(const std::vector<BlockState>& states, const ChainSpec& chain);
QuenchResult assemble_result(double tau_ns, const std::vector<BlockState>& states,
                             const ChainSpec& chain);

struct DisorderOptions {
  double d = 0.0;
  int realizations = 1;
  std::uint64_t seed = 0;
};

struct SweepOptions {
  EvolveOptions evolve;
  int threads = 1;
  MomentumGrid grid = MomentumGrid::kAntiperiodic;
  std::optional<DisorderOptions> disorder;
};

/// Final states of every block for one anneal. With `disorder` the 8-state
/// blocks are used.
std::vector<BlockState> evolve_chain(const ChainSpec& chain, const AnnealSchedule& schedule,
                                     double tau_ns, const SweepOptions& options,
                                     const DisorderRealization* disorder = nullptr);

/// One QuenchResult per tau, in grid order. Disordered sweeps reuse the same
/// realizations for every tau and report means with standard errors.
std::vector<QuenchResult> quench_sweep(const ChainSpec& chain, const AnnealSchedule& schedule,
                                       const std::vector<double>& tau_grid,
                                       const SweepOptions& options = {});

struct KzFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double r2 = 0.0;
  int points = 0;
};

/// Ordinary least squares of log K against log tau for tau in [tau_lo, tau_hi].
KzFit kz_fit(const std::vector<QuenchResult>& results, double tau_lo_ns, double tau_hi_ns);

}  // namespace mbco

#endif  // MBCO_OBSERVABLES_HPP
