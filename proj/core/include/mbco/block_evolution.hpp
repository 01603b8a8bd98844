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

#ifndef MBCO_BLOCK_EVOLUTION_HPP
#define MBCO_BLOCK_EVOLUTION_HPP

#include <functional>

#include <Eigen/Core>

#include "mbco/block_hamiltonian.hpp"
#include "mbco/chain.hpp"
#include "mbco/schedule.hpp"

namespace mbco {

enum class RkMethod { kDop853, kDopri5 };

struct EvolveOptions {
  /// Relative and absolute local error target of the Runge-Kutta controller.
  double tol = 1e-12;
  RkMethod method = RkMethod::kDop853;
  /// Largest tolerated | ||psi|| - 1 | before the result is rejected.
  double max_norm_drift = 1e-6;
};

/// Final amplitudes of one momentum block in the kBlockBasis order.
struct BlockState {
  double k = 0.0;
  Eigen::VectorXcd amplitudes;
  /// | ||psi|| - 1 | accumulated by the integrator, before renormalization.
  double norm_drift = 0.0;
  long steps = 0;

  int dim() const { return static_cast<int>(amplitudes.size()); }
};

/// Block Hamiltonian in GHz as a function of the anneal fraction s.
using BlockBuilder = std::function<Eigen::MatrixXcd(double s)>;

/// Integrates d psi / ds = -i 2 pi tau H(s) psi over s in [0, 1] from the
/// block vacuum. H is an ordinary frequency in GHz and tau is in ns. tau == 0
/// is the sudden quench and returns the vacuum. Throws NumericalError when the
/// norm drifts by more than options.max_norm_drift.
BlockState evolve_block(const BlockBuilder& builder, double k, int dim, double tau_ns,
                        const EvolveOptions& options = {});

/// Fast path for the clean chain: H(s) = coupling(s) H_J + field(s) H_h.
BlockState evolve_clean_block(double k, const ChainSpec& chain, const AnnealSchedule& schedule,
                              double tau_ns, const EvolveOptions& options = {});

/// Fast path for the 8-state disordered block. `field_mean` is the average
/// site multiplier and `h2k_scaled` = h_2k / sqrt(N); both scale with field(s).
BlockState evolve_disordered_block(double k, const ChainSpec& chain,
                                   const AnnealSchedule& schedule, double field_mean,
                                   Complex h2k_scaled, double tau_ns,
                                   const EvolveOptions& options = {});

}  // namespace mbco

#endif  // MBCO_BLOCK_EVOLUTION_HPP
