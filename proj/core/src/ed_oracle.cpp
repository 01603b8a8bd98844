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

#include "mbco/ed_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "mbco/errors.hpp"

namespace mbco {
namespace {

namespace odeint = boost::numeric::odeint;

int spin_z(std::size_t basis, int site) { return ((basis >> site) & 1u) ? -1 : 1; }

double field_multiplier(const DenseQuenchProblem& p, int site) {
  return p.h_site.empty() ? 1.0 : p.h_site[site];
}

std::vector<double> diagonal_zz(const DenseQuenchProblem& p) {
  const int n = p.chain.n;
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> diag(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    double e = 0.0;
    for (int bond = 0; bond < n; ++bond) {
      e += p.chain.bond_strength(bond) * spin_z(b, bond) * spin_z(b, (bond + 1) % n);
    }
    diag[b] = e;
  }
  return diag;
}

// Orbits of basis states under the symmetries that fix the initial state:
// global spin flip (even N) and, for a uniform field, translation by two
// sites. Amplitudes are constant on each orbit, so the dynamics reduce to one
// coefficient per orbit.
struct Sector {
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::size_t> orbit_of;
};

std::size_t rotate_bits(std::size_t b, int shift, int n) {
  if (shift == 0) return b;
  const std::size_t mask = (std::size_t{1} << n) - 1;
  return ((b << shift) | (b >> (n - shift))) & mask;
}

Sector build_sector(const DenseQuenchProblem& p) {
  const int n = p.chain.n;
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t mask = dim - 1;
  const bool flip = n % 2 == 0;
  const bool translate = p.h_site.empty() && n % 2 == 0;
  const int shifts = translate ? n / 2 : 1;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  Sector sector;
  sector.orbit_of.assign(dim, kUnset);
  for (std::size_t b = 0; b < dim; ++b) {
    if (sector.orbit_of[b] != kUnset) continue;
    const std::size_t id = sector.members.size();
    std::vector<std::size_t> orbit;
    for (int t = 0; t < shifts; ++t) {
      const std::size_t c = rotate_bits(b, 2 * t, n);
      for (std::size_t image : {c, flip ? (c ^ mask) : c}) {
        if (sector.orbit_of[image] == kUnset) {
          sector.orbit_of[image] = id;
          orbit.push_back(image);
        }
      }
    }
    sector.members.push_back(std::move(orbit));
  }
  return sector;
}

// Compressed rows of sum_n h_n sigma^x_n restricted to the sector.
struct SectorMatrix {
  std::vector<std::size_t> row_start;
  std::vector<std::size_t> cols;
  std::vector<double> values;
};

SectorMatrix sector_field_matrix(const DenseQuenchProblem& p, const Sector& sector) {
  const int n = p.chain.n;
  const std::size_t dim = sector.members.size();
  // <O|X|O'> = sqrt(|O'| / |O|) sum_{c in O} <c|X|r'> for any r' in O'.
  std::vector<std::map<std::size_t, double>> rows(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t rep = sector.members[col].front();
    const double size_col = static_cast<double>(sector.members[col].size());
    for (int site = 0; site < n; ++site) {
      const std::size_t row = sector.orbit_of[rep ^ (std::size_t{1} << site)];
      const double size_row = static_cast<double>(sector.members[row].size());
      rows[row][col] += field_multiplier(p, site) * std::sqrt(size_col / size_row);
    }
  }
  SectorMatrix m;
  m.row_start.push_back(0);
  for (const auto& row : rows) {
    for (const auto& [col, v] : row) {
      m.cols.push_back(col);
      m.values.push_back(v);
    }
    m.row_start.push_back(m.cols.size());
  }
  return m;
}

}  // namespace

void DenseQuenchProblem::validate() const {
  if (chain.n < 2 || chain.n > kMaxSites) {
    throw ConfigError("dense oracle supports 2 <= N <= 12 (got " + std::to_string(chain.n) + ")");
  }
  if (!(chain.j > 0.0) || chain.delta < 0.0) throw ConfigError("dense oracle needs J > 0, delta >= 0");
  if (!h_site.empty()) {
    if (static_cast<int>(h_site.size()) != chain.n) throw ConfigError("h_site length must equal N");
    for (double h : h_site) {
      if (!(h > 0.0)) throw ConfigError("dense oracle needs positive field multipliers");
    }
  }
  if (!(tau_ns >= 0.0)) throw ConfigError("anneal time must be >= 0");
}

SpinState ed_initial_state(const DenseQuenchProblem& problem) {
  problem.validate();
  const std::size_t dim = std::size_t{1} << problem.chain.n;
  const double amp = std::pow(2.0, -0.5 * problem.chain.n);
  SpinState psi(dim);
  // sigma^x = -1 on every site: (|up> - |down>) / sqrt(2) per spin.
  for (std::size_t b = 0; b < dim; ++b) {
    psi[b] = (std::popcount(b) % 2 == 0) ? amp : -amp;
  }
  return psi;
}

void ed_apply_hamiltonian(const DenseQuenchProblem& problem, double s, const SpinState& psi,
                          SpinState& out) {
  const int n = problem.chain.n;
  const std::size_t dim = std::size_t{1} << n;
  const SchedulePoint p = problem.schedule.eval(s);
  out.assign(dim, 0.0);
  for (std::size_t b = 0; b < dim; ++b) {
    double e = 0.0;
    for (int bond = 0; bond < n; ++bond) {
      e += problem.chain.bond_strength(bond) * spin_z(b, bond) * spin_z(b, (bond + 1) % n);
    }
    out[b] += p.coupling_ghz * e * psi[b];
    for (int site = 0; site < n; ++site) {
      out[b ^ (std::size_t{1} << site)] += p.field_ghz * field_multiplier(problem, site) * psi[b];
    }
  }
}

Eigen::MatrixXcd ed_dense_hamiltonian(const DenseQuenchProblem& problem, double s) {
  problem.validate();
  const std::size_t dim = std::size_t{1} << problem.chain.n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  SpinState e(dim), col;
  for (std::size_t b = 0; b < dim; ++b) {
    std::fill(e.begin(), e.end(), 0.0);
    e[b] = 1.0;
    ed_apply_hamiltonian(problem, s, e, col);
    for (std::size_t r = 0; r < dim; ++r) h(r, b) = col[r];
  }
  return h;
}

EdResult ed_evolve(const DenseQuenchProblem& problem, double tol) {
  problem.validate();
  if (!(tol > 0.0)) throw ConfigError("oracle tolerance must be positive");
  EdResult result;
  result.state = ed_initial_state(problem);
  if (problem.tau_ns == 0.0) return result;

  const Sector sector = build_sector(problem);
  const std::size_t dim = sector.members.size();
  const std::vector<double> diag_full = diagonal_zz(problem);

  std::vector<double> diag(dim);
  SpinState psi(dim);
  for (std::size_t o = 0; o < dim; ++o) {
    const std::size_t rep = sector.members[o].front();
    diag[o] = diag_full[rep];
    psi[o] = std::sqrt(static_cast<double>(sector.members[o].size())) * result.state[rep];
  }
  const SectorMatrix field = sector_field_matrix(problem, sector);
  const std::complex<double> phase(0.0, -2.0 * std::numbers::pi * problem.tau_ns);

  auto rhs = [&](const SpinState& y, SpinState& dy, double s) {
    const SchedulePoint p = problem.schedule.eval(std::clamp(s, 0.0, 1.0));
    for (std::size_t row = 0; row < dim; ++row) {
      std::complex<double> acc = p.coupling_ghz * diag[row] * y[row];
      std::complex<double> x = 0.0;
      for (std::size_t e = field.row_start[row]; e < field.row_start[row + 1]; ++e) {
        x += field.values[e] * y[field.cols[e]];
      }
      dy[row] = phase * (acc + p.field_ghz * x);
    }
  };

  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<SpinState>());
  odeint::integrate_adaptive(stepper, rhs, psi, 0.0, 1.0, 1e-4);

  double norm2 = 0.0;
  for (const auto& a : psi) norm2 += std::norm(a);
  result.norm_drift = std::abs(std::sqrt(norm2) - 1.0);
  if (result.norm_drift > 1e-9) {
    std::ostringstream msg;
    msg << "dense oracle norm drift " << result.norm_drift << " exceeds 1e-9";
    throw NumericalError(msg.str());
  }
  for (std::size_t o = 0; o < dim; ++o) {
    const double w = 1.0 / std::sqrt(static_cast<double>(sector.members[o].size()));
    for (std::size_t c : sector.members[o]) result.state[c] = w * psi[o];
  }
  return result;
}

EdObservables ed_observables(const SpinState& state, const ChainSpec& chain) {
  const int n = chain.n;
  if (n < 2 || n > DenseQuenchProblem::kMaxSites || state.size() != (std::size_t{1} << n)) {
    throw ConfigError("state dimension does not match 2^N");
  }
  EdObservables obs;
  obs.bond_zz.assign(n, 0.0);
  for (std::size_t b = 0; b < state.size(); ++b) {
    const double w = std::norm(state[b]);
    if (w == 0.0) continue;
    for (int bond = 0; bond < n; ++bond) {
      obs.bond_zz[bond] += w * spin_z(b, bond) * spin_z(b, (bond + 1) % n);
    }
  }
  double total = 0.0, strong_minus_weak = 0.0, index_stag = 0.0;
  for (int bond = 0; bond < n; ++bond) {
    total += obs.bond_zz[bond];
    strong_minus_weak += chain.strong_sign(bond) * obs.bond_zz[bond];
    index_stag += (bond % 2 == 0 ? 1.0 : -1.0) * obs.bond_zz[bond];
  }
  obs.kink_density = (n + total) / (2.0 * n);
  obs.staggered_diff = -strong_minus_weak / (2.0 * n);
  obs.index_staggered = index_stag / (2.0 * n);
  return obs;
}

std::vector<double> ed_magnetizations(const SpinState& state, int n) {
  std::vector<double> m(n, 0.0);
  for (std::size_t b = 0; b < state.size(); ++b) {
    const double w = std::norm(state[b]);
    for (int site = 0; site < n; ++site) m[site] += w * spin_z(b, site);
  }
  return m;
}

}  // namespace mbco
