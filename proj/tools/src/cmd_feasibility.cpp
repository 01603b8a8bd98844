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


#include <fstream>

#include "context.hpp"
#include "mbco/errors.hpp"
#include "mbco/feasibility.hpp"

namespace mbco::cli {
namespace {

class FeasibilityCommand final : public Command {
 public:
  std::string name() const override { return "feasibility"; }
  std::string description() const override {
    return "Coherence, Nyquist and temperature conditions for observing an oscillation";
  }

  void bind(CLI::App& sub) override {
    sub.add_option("--tau-max", tau_max_, "Longest anneal time, ns")->capture_default_str();
    sub.add_option("--dtau", dtau_, "Anneal-time spacing, ns")->capture_default_str();
    sub.add_option("--omega", omega_, "Oscillation frequency, GHz")->capture_default_str();
    sub.add_option("--temperature-mk", temperature_, "Device temperature, mK")->capture_default_str();
    sub.add_option("--coherence-ns", coherence_, "Coherence-time bound, ns")->capture_default_str();
  }

  Json resolved() const override {
    return Json{{"tau-max", tau_max_},
                {"dtau", dtau_},
                {"omega", omega_},
                {"temperature-mk", temperature_},
                {"coherence-ns", coherence_}};
  }

  int run(RunContext& ctx) override {
    if (!(tau_max_ > 0.0) || !(dtau_ > 0.0) || !(coherence_ > 0.0)) {
      throw ConfigError("--tau-max, --dtau and --coherence-ns must be positive");
    }
    if (!(omega_ >= 0.0) || !(temperature_ >= 0.0)) {
      throw ConfigError("--omega and --temperature-mk must be >= 0");
    }
    FeasibilityOptions opts;
    opts.coherence_time_ns = coherence_;
    const FeasibilityReport r = feasibility_check(tau_max_, dtau_, omega_, temperature_, opts);

    auto mark = [](bool ok) { return ok ? "ok" : "VIOLATED"; };
    std::ostream& out = *ctx.out;
    out << "(1) coherence: tau_max = " << tau_max_ << " ns vs bound " << coherence_ << " ns: "
        << mark(r.coherence_ok) << '\n';
    out << "(2) sampling:  Omega_max = 1/(2 dtau) = " << r.nyquist_ghz << " GHz vs Omega = " << omega_
        << " GHz: " << mark(r.nyquist_ok) << '\n';
    out << "(3) thermal:   T* = h Omega / k_B = " << r.t_star_h_mk << " mK (hbar convention "
        << r.t_star_hbar_mk << " mK) vs T = " << temperature_ << " mK: " << mark(r.temperature_ok)
        << '\n';
    out << (r.all_ok() ? "all conditions satisfied" : "some conditions violated") << '\n';

    const Json j{{"nyquist_GHz", r.nyquist_ghz},
                 {"t_star_h_mK", r.t_star_h_mk},
                 {"t_star_hbar_mK", r.t_star_hbar_mk},
                 {"coherence_ok", r.coherence_ok},
                 {"nyquist_ok", r.nyquist_ok},
                 {"temperature_ok", r.temperature_ok},
                 {"all_ok", r.all_ok()}};
    std::ofstream(ctx.out_dir() / "feasibility.json") << j.dump(2) << '\n';
    write_manifest(ctx, resolved(), Json{{"feasibility", j}});
    return kExitOk;
  }

 private:
  double tau_max_ = 20.0;
  double dtau_ = 0.02;
  double omega_ = 5.4;
  double temperature_ = 12.0;
  double coherence_ = 50.0;
};

}  // namespace

std::unique_ptr<Command> make_feasibility_command() {
  return std::make_unique<FeasibilityCommand>();
}

}  // namespace mbco::cli
