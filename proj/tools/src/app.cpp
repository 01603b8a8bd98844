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


#include "mbco/cli/app.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>

#include "context.hpp"
#include "mbco/errors.hpp"

namespace mbco::cli {
namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quenched staggered Ising chains: defect sweeps, coherent-oscillation spectra, "
               "shim calibration and exact-diagonalization cross-checks."};
  app.name("mbco");
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--out", global.out, "Output directory")->capture_default_str();
  app.add_option("--seed", global.seed, "Master random seed")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--tol", global.tol, "Integrator tolerance")->capture_default_str();
  app.add_option("--config", global.config, "JSON config file (flags override its values)");
  app.set_version_flag("--version", std::string(MBCO_VERSION));

  std::vector<std::unique_ptr<Command>> commands;
  commands.push_back(make_sweep_command());
  commands.push_back(make_spectrum_command());
  commands.push_back(make_shim_command());
  commands.push_back(make_oracle_command());
  commands.push_back(make_feasibility_command());
  for (auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c->name(), c->description());
    sub->fallthrough();
    c->bind(*sub);
  }

  try {
    std::vector<std::string> merged = merge_config(args, app);
    std::vector<std::string> reversed(merged.rbegin(), merged.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  Command* chosen = nullptr;
  for (auto& c : commands) {
    if (app.got_subcommand(c->name())) chosen = c.get();
  }
  if (!chosen) {
    err << "error: no subcommand given\n";
    return kExitConfig;
  }

  RunContext ctx;
  ctx.global = global;
  ctx.command = chosen->name();
  ctx.started_at = utc_now();
  ctx.out = &out;
  ctx.err = &err;
  try {
    std::filesystem::create_directories(ctx.out_dir());
    return chosen->run(ctx);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace mbco::cli
