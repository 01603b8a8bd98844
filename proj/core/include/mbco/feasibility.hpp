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

#ifndef MBCO_FEASIBILITY_HPP
#define MBCO_FEASIBILITY_HPP

namespace mbco {

struct FeasibilityOptions {
  /// Upper end of the qubit coherence window, ns.
  double coherence_time_ns = 50.0;
};

/// The three prerequisites for seeing oscillations at frequency omega:
/// anneals shorter than the coherence time, Nyquist sampling of the tau grid,
/// and a device colder than one oscillation quantum.
struct FeasibilityReport {
  double nyquist_ghz = 0.0;     // 1 / (2 dtau)
  double t_star_h_mk = 0.0;     // h * omega / k_B, omega an ordinary frequency
  double t_star_hbar_mk = 0.0;  // hbar * omega / k_B
  bool coherence_ok = false;
  bool nyquist_ok = false;
  bool temperature_ok = false;  // judged against t_star_h_mk

  bool all_ok() const { return coherence_ok && nyquist_ok && temperature_ok; }
};

FeasibilityReport feasibility_check(double tau_max_ns, double dtau_ns, double omega_ghz,
                                    double device_temperature_mk,
                                    const FeasibilityOptions& options = {});

}  // namespace mbco

#endif  // MBCO_FEASIBILITY_HPP
