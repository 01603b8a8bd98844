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

#include "mbco/feasibility.hpp"

#include <numbers>

namespace mbco {
namespace {

// CODATA exact values.
constexpr double kPlanck = 6.62607015e-34;       // J s
constexpr double kBoltzmann = 1.380649e-23;      // J / K

}  // namespace

FeasibilityReport feasibility_check(double tau_max_ns, double dtau_ns, double omega_ghz,
                                    double device_temperature_mk,
                                    const FeasibilityOptions& options) {
  FeasibilityReport report;
  report.nyquist_ghz = 1.0 / (2.0 * dtau_ns);
  const double energy = kPlanck * omega_ghz * 1e9;
  report.t_star_h_mk = energy / kBoltzmann * 1e3;
  report.t_star_hbar_mk = report.t_star_h_mk / (2.0 * std::numbers::pi);
  report.coherence_ok = tau_max_ns <= options.coherence_time_ns;
  report.nyquist_ok = omega_ghz < report.nyquist_ghz;
  report.temperature_ok = device_temperature_mk < report.t_star_h_mk;
  return report;
}

}  // namespace mbco
