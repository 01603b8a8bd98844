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

#include "mbco/observables.hpp"

#include <cmath>
#include <sstream>

#include "mbco/errors.hpp"
#include "mbco/parallel.hpp"

namespace mbco {
namespace {

void check_states(const std::vector<BlockState>& states, const ChainSpec& chain) {
  chain.validate();
  auto matches = [&](MomentumGrid grid) {
    const std::vector<double> ks = allowed_momenta(chain.n, grid);
    if (ks.size() != states.size()) return false;
    for (size_t i = 0; i < ks.size(); ++i) {
      if (std::abs(ks[i] - states[i].k) > 1e-12) return false;
    }
    return true;
  };
  if (!matches(MomentumGrid::kAntiperiodic) && !matches(MomentumGrid::kPeriodic)) {
    throw ConfigError("block states do not match the momentum grid of an N=" +
                      std::to_string(chain.n) + " chain");
  }
}

double expectation(const Eigen::VectorXcd& psi, const Block6& op) {
  const auto head = psi.head<6>();
  return (head.adjoint() * op * head)(0, 0).real();
}

}  // namespace

BondSums bond_correlation_sums(const std::vector<BlockState>& states, const ChainSpec& chain) {
  check_states(states, chain);
  BondSums sums;
  double staggered = 0.0;  // weight (-1)^n
  for (const BlockState& st : states) {
    if (st.dim() != 6 && st.dim() != 8) throw ConfigError("block state must have 6 or 8 amplitudes");
    // The two extra disorder states carry no bond energy.
    sums.total += expectation(st.amplitudes, build_block6(st.k, 1.0, 0.0, 0.0));
    staggered += expectation(st.amplitudes, build_block6(st.k, 0.0, 1.0, 0.0));
  }
  sums.strong_minus_weak =
      chain.strong_bond_parity == BondParity::kEven ? staggered : -staggered;
  return sums;
}

QuenchResult assemble_result(double tau_ns, const std::vector<BlockState>& states,
                             const ChainSpec& chain) {
  const BondSums sums = bond_correlation_sums(states, chain);
  const double n = chain.n;
  QuenchResult r;
  r.tau_ns = tau_ns;
  // Each sublattice has N/2 bonds; p = (1 + <zz>) / 2 per bond.
  r.p_strong = 0.5 + 0.5 * (sums.total + sums.strong_minus_weak) / n;
  r.p_weak = 0.5 + 0.5 * (sums.total - sums.strong_minus_weak) / n;
  r.kink_density = 0.5 + sums.total / (2.0 * n);
  r.staggered_diff = -sums.strong_minus_weak / (2.0 * n);
  return r;
}

double kink_density(const std::vector<BlockState>& states, const ChainSpec& chain) {
  return assemble_result(0.0, states, chain).kink_density;
}

double staggered_kink_diff(const std::vector<BlockState>& states, const ChainSpec& chain) {
  return assemble_result(0.0, states, chain).staggered_diff;
}

std::vector<BlockState> evolve_chain(const ChainSpec& chain, const AnnealSchedule& schedule,
                                     double tau_ns, const SweepOptions& options,
                                     const DisorderRealization* disorder) {
  chain.validate();
  const std::vector<double> ks = allowed_momenta(chain.n, options.grid);
  if (disorder && disorder->momenta.size() != ks.size()) {
    throw ConfigError("disorder realization does not match the chain's momentum grid");
  }
  std::vector<BlockState> states;
  states.reserve(ks.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    if (disorder) {
      const Complex scaled = disorder->h_2k[i] / std::sqrt(static_cast<double>(chain.n));
      states.push_back(evolve_disordered_block(ks[i], chain, schedule, disorder->mean_field(), scaled,
                                               tau_ns, options.evolve));
    } else {
      states.push_back(evolve_clean_block(ks[i], chain, schedule, tau_ns, options.evolve));
    }
  }
  return states;
}

std::vector<QuenchResult> quench_sweep(const ChainSpec& chain, const AnnealSchedule& schedule,
                                       const std::vector<double>& tau_grid,
                                       const SweepOptions& options) {
  chain.validate();
  if (tau_grid.empty()) throw ConfigError("tau grid is empty");
  for (size_t i = 0; i < tau_grid.size(); ++i) {
    if (!(tau_grid[i] >= 0.0)) throw ConfigError("anneal times must be >= 0");
    if (i > 0 && !(tau_grid[i] > tau_grid[i - 1])) {
      throw ConfigError("tau grid must be strictly increasing");
    }
  }

  std::vector<DisorderRealization> realizations;
  if (options.disorder) {
    const DisorderOptions& dis = *options.disorder;
    if (dis.realizations < 1) throw ConfigError("need at least one disorder realization");
    for (int r = 0; r < dis.realizations; ++r) {
      realizations.push_back(sample_disorder(dis.d, chain.n, dis.seed, r, options.grid));
    }
  }
  const size_t per_tau = realizations.empty() ? 1 : realizations.size();
  std::vector<QuenchResult> raw(tau_grid.size() * per_tau);

  parallel_for(raw.size(), options.threads, [&](size_t item) {
    const size_t ti = item / per_tau;
    const size_t ri = item % per_tau;
    const DisorderRealization* dis = realizations.empty() ? nullptr : &realizations[ri];
    try {
      raw[item] = assemble_result(tau_grid[ti], evolve_chain(chain, schedule, tau_grid[ti], options, dis),
                                  chain);
    } catch (const NumericalError& e) {
      std::ostringstream msg;
      msg << "tau=" << tau_grid[ti] << " ns: " << e.what();
      throw NumericalError(msg.str());
    }
  });

  if (per_tau == 1) return raw;

  std::vector<QuenchResult> out;
  out.reserve(tau_grid.size());
  const double r = static_cast<double>(per_tau);
  for (size_t ti = 0; ti < tau_grid.size(); ++ti) {
    QuenchResult mean;
    mean.tau_ns = tau_grid[ti];
    mean.realizations = static_cast<int>(per_tau);
    for (size_t ri = 0; ri < per_tau; ++ri) {
      const QuenchResult& q = raw[ti * per_tau + ri];
      mean.kink_density += q.kink_density / r;
      mean.staggered_diff += q.staggered_diff / r;
      mean.p_strong += q.p_strong / r;
      mean.p_weak += q.p_weak / r;
    }
    double var_k = 0.0, var_p = 0.0;
    for (size_t ri = 0; ri < per_tau; ++ri) {
      const QuenchResult& q = raw[ti * per_tau + ri];
      var_k += std::pow(q.kink_density - mean.kink_density, 2);
      var_p += std::pow(q.staggered_diff - mean.staggered_diff, 2);
    }
    mean.kink_stderr = std::sqrt(var_k / (r - 1.0) / r);
    mean.staggered_stderr = std::sqrt(var_p / (r - 1.0) / r);
    out.push_back(mean);
  }
  return out;
}

KzFit kz_fit(const std::vector<QuenchResult>& results, double tau_lo_ns, double tau_hi_ns) {
  std::vector<double> x, y;
  for (const QuenchResult& q : results) {
    if (q.tau_ns < tau_lo_ns || q.tau_ns > tau_hi_ns) continue;
    if (!(q.kink_density > 0.0)) throw ConfigError("kink density must be positive inside the fit window");
    x.push_back(std::log(q.tau_ns));
    y.push_back(std::log(q.kink_density));
  }
  if (x.size() < 5) throw ConfigError("Kibble-Zurek fit needs at least 5 points in the window");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i] / n;
    my += y[i] / n;
  }
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw ConfigError("fit window holds a single distinct tau");
  KzFit fit;
  fit.points = static_cast<int>(x.size());
  fit.exponent = sxy / sxx;
  fit.amplitude = std::exp(my - fit.exponent * mx);
  const double ss_res = syy - fit.exponent * sxy;
  fit.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

}  // namespace mbco
