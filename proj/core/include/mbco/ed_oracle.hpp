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

#ifndef MBCO_ED_ORACLE_HPP
#define MBCO_ED_ORACLE_HPP

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "mbco/chain.hpp"
#include "mbco/schedule.hpp"

namespace mbco {

/// Full 2^N spin problem for brute-force checks of the fermionic solution.
/// Bit n of a basis index is 1 when spin n points down (sigma^z = -1).
struct DenseQuenchProblem {
  ChainSpec chain;
  /// Site multipliers of the transverse field; empty means all ones.
  std::vector<double> h_site;
  AnnealSchedule schedule = AnnealSchedule::linear(1.0, 1.0);
  double tau_ns = 0.0;

  static constexpr int kMaxSites = 12;
  void validate() const;
};

using SpinState = std::vector<std::complex<double>>;

/// Product state with every spin anti-aligned with its field term.
SpinState ed_initial_state(const DenseQuenchProblem& problem);

/// H(s) psi in GHz, applying the Pauli operators on the fly.
void ed_apply_hamiltonian(const DenseQuenchProblem& problem, double s, const SpinState& psi,
                          SpinState& out);

/// Dense H(s) for small N (tests and ground-state checks).
Eigen::MatrixXcd ed_dense_hamiltonian(const DenseQuenchProblem& problem, double s);

struct EdResult {
  SpinState state;
  double norm_drift = 0.0;
};

/// Integrates the Schroedinger equation with the same 2 pi tau phase
/// convention as the block solver, using an embedded Runge-Kutta-Fehlberg 7(8)
/// stepper inside the orbit sector of the initial state (global spin flip and,
/// for uniform fields, two-site translations). The returned state is the full
/// 2^N vector. Throws NumericalError on norm drift above 1e-9.
EdResult ed_evolve(const DenseQuenchProblem& problem, double tol = 1e-13);

struct EdObservables {
  double kink_density = 0.0;
  /// (p_weak - p_strong) / 2, the same convention as QuenchResult.
  double staggered_diff = 0.0;
  /// <s^z_n s^z_{n+1}> for bond n = 0 .. N-1 (bond N-1 closes the ring).
  std::vector<double> bond_zz;
  /// (1 / 2N) sum_n (-1)^n <s^z_n s^z_{n+1}> with the raw site index.
  double index_staggered = 0.0;
};

EdObservables ed_observables(const SpinState& state, const ChainSpec& chain);

/// <sigma^z_n> for every site.
std::vector<double> ed_magnetizations(const SpinState& state, int n);

}  // namespace mbco

#endif  // MBCO_ED_ORACLE_HPP
