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


#ifndef MBCO_TOOLS_CONTEXT_HPP
#define MBCO_TOOLS_CONTEXT_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbco/chain.hpp"
#include "mbco/cli/app.hpp"
#include "mbco/momenta.hpp"
#include "mbco/schedule.hpp"

namespace mbco::cli {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  std::string out = "mbco_out";
  std::uint64_t seed = 1;
  int threads = 0;
  /// Integrator tolerance handed to every evolution.
  double tol = 1e-12;
  std::string config;

  Json to_json() const;
};

struct RunContext {
  GlobalOptions global;
  std::string command;
  std::string started_at;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::filesystem::path out_dir() const;
  int threads() const;
};

/// Writes manifest.json into the output directory. `extra` is merged at top level.
void write_manifest(const RunContext& ctx, const Json& resolved_command, const Json& extra = {});

/// Chain and schedule flags shared by several subcommands.
struct ModelArgs {
  int n = 160;
  double j = 1.0;
  double delta = 0.4;
  std::string strong_parity = "even";
  double gamma0 = 11.0;
  double jfinal = 15.0;
  std::string schedule_csv;
  std::string grid = "antiperiodic";

  void bind(CLI::App& app);
  void to_json(Json& j) const;
  ChainSpec chain() const;
  /// Linear schedule unless schedule_csv is set.
  AnnealSchedule schedule() const;
  /// Same schedule with the field envelope rescaled so that Gamma(0) = gamma0.
  AnnealSchedule schedule_with_gamma0(double gamma0_ghz) const;
  MomentumGrid momentum_grid() const;
};

struct TauGridArgs {
  double tau_min = 5.0;
  double tau_max = 25.0;
  int points = 200;
  std::string spacing = "linear";

  void bind(CLI::App& app);
  void to_json(Json& j) const;
  std::vector<double> grid() const;
};

class Command {
 public:
  virtual ~Command() = default;
  virtual std::string name() const = 0;
  virtual std::string description() const = 0;
  virtual void bind(CLI::App& sub) = 0;
  virtual Json resolved() const = 0;
  virtual int run(RunContext& ctx) = 0;
};

std::unique_ptr<Command> make_sweep_command();
std::unique_ptr<Command> make_spectrum_command();
std::unique_ptr<Command> make_shim_command();
std::unique_ptr<Command> make_oracle_command();
std::unique_ptr<Command> make_feasibility_command();

/// Splices values from a JSON config file into the argument list. Flags
/// already present in `args` win.
std::vector<std::string> merge_config(const std::vector<std::string>& args, const CLI::App& app);

}  // namespace mbco::cli

#endif  // MBCO_TOOLS_CONTEXT_HPP
