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

#include "mbco/block_evolution.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mbco/errors.hpp"
#include "mbco/rk_integrator.hpp"

namespace mbco {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_inputs(double tau_ns, const EvolveOptions& options) {
  if (!(tau_ns >= 0.0) || !std::isfinite(tau_ns)) throw ConfigError("anneal time must be >= 0");
  if (!(options.tol > 0.0)) throw ConfigError("integrator tolerance must be positive");
}

template <class Vector>
Vector vacuum(int dim) {
  Vector psi = Vector::Zero(dim);
  psi[kVacuumIndex] = 1.0;
  return psi;
}

template <class Vector>
BlockState finish(double k, Vector psi, RkStats stats, const EvolveOptions& options) {
  const double norm = psi.norm();
  const double drift = std::abs(norm - 1.0);
  if (!(drift <= options.max_norm_drift)) {
    std::ostringstream msg;
    msg << "norm drift " << drift << " exceeds " << options.max_norm_drift << " in block k=" << k;
    throw NumericalError(msg.str());
  }
  BlockState state;
  state.k = k;
  state.amplitudes = psi / norm;
  state.norm_drift = drift;
  state.steps = stats.accepted;
  return state;
}

RkOptions rk_options(const EvolveOptions& options) {
  RkOptions rk;
  rk.rtol = options.tol;
  rk.atol = options.tol;
  return rk;
}

template <class State, class Rhs>
RkStats integrate(Rhs&& rhs, State& psi, const EvolveOptions& options) {
  if (options.method == RkMethod::kDopri5) {
    return integrate_dopri5(rhs, psi, 0.0, 1.0, rk_options(options));
  }
  return integrate_dop853(rhs, psi, 0.0, 1.0, rk_options(options));
}

template <int Dim>
BlockState evolve_affine(double k, const Eigen::Matrix<Complex, Dim, Dim>& coupling_part,
                         const Eigen::Matrix<Complex, Dim, Dim>& field_part,
                         const AnnealSchedule& schedule, double tau_ns,
                         const EvolveOptions& options) {
  using Vector = Eigen::Matrix<Complex, Dim, 1>;
  using Matrix = Eigen::Matrix<Complex, Dim, Dim>;
  check_inputs(tau_ns, options);
  Vector psi = vacuum<Vector>(Dim);
  if (tau_ns == 0.0) return finish(k, psi, {}, options);

  // Fold -i 2 pi tau into the two constant parts once.
  const Complex phase(0.0, -kTwoPi * tau_ns);
  const Matrix a = phase * coupling_part;
  const Matrix b = phase * field_part;
  auto rhs = [&](double s, const Vector& y, Vector& dy) {
    const SchedulePoint p = schedule.eval(std::min(s, 1.0));
    const Matrix m = p.coupling_ghz * a + p.field_ghz * b;
    dy.noalias() = m * y;
  };
  RkStats stats;
  try {
    stats = integrate(rhs, psi, options);
  } catch (const NumericalError& e) {
    std::ostringstream msg;
    msg << e.what() << " (block k=" << k << ")";
    throw NumericalError(msg.str());
  }
  return finish(k, psi, stats, options);
}

}  // namespace

BlockState evolve_block(const BlockBuilder& builder, double k, int dim, double tau_ns,
                        const EvolveOptions& options) {
  check_inputs(tau_ns, options);
  if (dim != 6 && dim != 8) throw ConfigError("block dimension must be 6 or 8");
  Eigen::VectorXcd psi = vacuum<Eigen::VectorXcd>(dim);
  if (tau_ns == 0.0) return finish(k, psi, {}, options);

  const Complex phase(0.0, -kTwoPi * tau_ns);
  auto rhs = [&](double s, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
    const Eigen::MatrixXcd h = builder(std::min(s, 1.0));
    dy.noalias() = phase * (h * y);
  };
  RkStats stats;
  try {
    stats = integrate(rhs, psi, options);
  } catch (const NumericalError& e) {
    std::ostringstream msg;
    msg << e.what() << " (block k=" << k << ")";
    throw NumericalError(msg.str());
  }
  return finish(k, psi, stats, options);
}

BlockState evolve_clean_block(double k, const ChainSpec& chain, const AnnealSchedule& schedule,
                              double tau_ns, const EvolveOptions& options) {
  const Block6 coupling_part = build_block6(k, chain.j, chain.signed_delta(), 0.0);
  const Block6 field_part = build_block6(k, 0.0, 0.0, 1.0);
  return evolve_affine<6>(k, coupling_part, field_part, schedule, tau_ns, options);
}

BlockState evolve_disordered_block(double k, const ChainSpec& chain,
                                   const AnnealSchedule& schedule, double field_mean,
                                   Complex h2k_scaled, double tau_ns,
                                   const EvolveOptions& options) {
  const Block8 coupling_part = build_block8(k, chain.j, chain.signed_delta(), 0.0, 0.0);
  const Block8 field_part = build_block8(k, 0.0, 0.0, field_mean, h2k_scaled);
  return evolve_affine<8>(k, coupling_part, field_part, schedule, tau_ns, options);
}

}  // namespace mbco
