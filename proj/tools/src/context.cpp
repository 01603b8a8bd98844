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


#include "context.hpp"

#include <cmath>
#include <fstream>

#include "mbco/errors.hpp"
#include "mbco/parallel.hpp"

#ifndef MBCO_VERSION
#define MBCO_VERSION "unknown"
#endif

namespace mbco::cli {

Json GlobalOptions::to_json() const {
  return Json{{"out", out}, {"seed", seed}, {"threads", threads}, {"tol", tol}};
}

std::filesystem::path RunContext::out_dir() const { return std::filesystem::path(global.out); }

int RunContext::threads() const { return resolve_thread_count(global.threads); }

void write_manifest(const RunContext& ctx, const Json& resolved_command, const Json& extra) {
  Json resolved = ctx.global.to_json();
  resolved[ctx.command] = resolved_command;
  Json manifest{{"command", ctx.command},
                {"resolved_config", resolved},
                {"seed", ctx.global.seed},
                {"version", MBCO_VERSION},
                {"started_at", ctx.started_at}};
  for (const auto& [key, value] : extra.items()) manifest[key] = value;
  const auto path = ctx.out_dir() / "manifest.json";
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << manifest.dump(2) << '\n';
}

void ModelArgs::bind(CLI::App& app) {
  app.add_option("--n", n, "Chain length (multiple of 4)")->capture_default_str();
  app.add_option("--j", j, "Mean coupling J")->capture_default_str();
  app.add_option("--delta", delta, "Staggering: bonds alternate J+delta, J-delta")->capture_default_str();
  app.add_option("--strong-parity", strong_parity, "Parity of the strong bonds (even|odd)")
      ->capture_default_str();
  app.add_option("--gamma0", gamma0, "Linear schedule: initial transverse field, GHz")
      ->capture_default_str();
  app.add_option("--jfinal", jfinal, "Linear schedule: final coupling envelope, GHz")
      ->capture_default_str();
  app.add_option("--schedule-csv", schedule_csv, "Tabulated schedule (s,J_GHz,Gamma_GHz)");
  app.add_option("--grid", grid, "Momentum grid (antiperiodic|periodic)")->capture_default_str();
}

void ModelArgs::to_json(Json& j_out) const {
  j_out["n"] = n;
  j_out["j"] = j;
  j_out["delta"] = delta;
  j_out["strong-parity"] = strong_parity;
  j_out["gamma0"] = gamma0;
  j_out["jfinal"] = jfinal;
  j_out["schedule-csv"] = schedule_csv;
  j_out["grid"] = grid;
}

ChainSpec ModelArgs::chain() const {
  ChainSpec c;
  c.n = n;
  c.j = j;
  c.delta = delta;
  c.strong_bond_parity = parse_bond_parity(strong_parity);
  c.validate();
  return c;
}

AnnealSchedule ModelArgs::schedule() const {
  if (!schedule_csv.empty()) return load_schedule_csv(schedule_csv);
  return AnnealSchedule::linear(gamma0, jfinal);
}

AnnealSchedule ModelArgs::schedule_with_gamma0(double gamma0_ghz) const {
  if (schedule_csv.empty()) return AnnealSchedule::linear(gamma0_ghz, jfinal);
  std::vector<ScheduleRow> rows = load_schedule_csv(schedule_csv).table();
  const double g0 = rows.front().field_ghz;
  if (!(g0 > 0.0)) throw ConfigError("tabulated schedule has Gamma(0) = 0; cannot rescale");
  for (ScheduleRow& r : rows) r.field_ghz *= gamma0_ghz / g0;
  return AnnealSchedule::tabulated(std::move(rows));
}

MomentumGrid ModelArgs::momentum_grid() const {
  if (grid == "antiperiodic") return MomentumGrid::kAntiperiodic;
  if (grid == "periodic") return MomentumGrid::kPeriodic;
  throw ConfigError("--grid must be 'antiperiodic' or 'periodic', got '" + grid + "'");
}

void TauGridArgs::bind(CLI::App& app) {
  app.add_option("--tau-min", tau_min, "Shortest anneal time, ns")->capture_default_str();
  app.add_option("--tau-max", tau_max, "Longest anneal time, ns")->capture_default_str();
  app.add_option("--tau-points", points, "Number of anneal times")->capture_default_str();
  app.add_option("--tau-spacing", spacing, "Grid spacing (linear|log)")->capture_default_str();
}

void TauGridArgs::to_json(Json& j) const {
  j["tau-min"] = tau_min;
  j["tau-max"] = tau_max;
  j["tau-points"] = points;
  j["tau-spacing"] = spacing;
}

std::vector<double> TauGridArgs::grid() const {
  if (points < 1) throw ConfigError("--tau-points must be >= 1");
  if (!(tau_min >= 0.0) || !(tau_max >= tau_min)) {
    throw ConfigError("need 0 <= tau-min <= tau-max");
  }
  if (points == 1) return {tau_min};
  if (tau_max == tau_min) throw ConfigError("tau-max must exceed tau-min for more than one point");
  std::vector<double> g(static_cast<size_t>(points));
  if (spacing == "linear") {
    const double step = (tau_max - tau_min) / (points - 1);
    for (int i = 0; i < points; ++i) g[i] = tau_min + step * i;
  } else if (spacing == "log") {
    if (!(tau_min > 0.0)) throw ConfigError("log spacing needs tau-min > 0");
    const double a = std::log(tau_min), b = std::log(tau_max);
    for (int i = 0; i < points; ++i) g[i] = std::exp(a + (b - a) * i / (points - 1));
  } else {
    throw ConfigError("--tau-spacing must be 'linear' or 'log', got '" + spacing + "'");
  }
  g.back() = tau_max;
  return g;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number() || v.is_null()) return v.dump();
  throw ConfigError("config values must be scalars or arrays of scalars");
}

bool flag_present(const std::vector<std::string>& args, const std::string& flag, size_t lo,
                  size_t hi) {
  for (size_t i = lo; i < hi && i < args.size(); ++i) {
    if (args[i] == flag || args[i].rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> merge_config(const std::vector<std::string>& args, const CLI::App& app) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;

  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file " + path);
  Json cfg;
  try {
    cfg = Json::parse(f);
  } catch (const Json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config file must hold a JSON object");

  std::string command;
  if (cfg.contains("command") && cfg["command"].is_string()) command = cfg["command"];
  if (cfg.contains("resolved_config")) cfg = cfg["resolved_config"];  // a previous manifest

  const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
  auto find_sub = [&](const std::string& name) -> const CLI::App* {
    for (const CLI::App* s : subs) {
      if (s->get_name() == name) return s;
    }
    return nullptr;
  };

  size_t sub_pos = args.size();
  const CLI::App* sub = nullptr;
  for (size_t i = 0; i < args.size() && !sub; ++i) {
    if (const CLI::App* s = find_sub(args[i])) {
      sub = s;
      sub_pos = i;
    }
  }
  bool append_command = false;
  if (!sub && !command.empty()) {
    sub = find_sub(command);
    if (!sub) throw ConfigError("config names unknown command '" + command + "'");
    append_command = true;
  }

  auto tokens_for = [&](const Json& section, const CLI::App& owner, bool global) {
    std::vector<std::string> out;
    for (const auto& [key, value] : section.items()) {
      if (key == "config" || key == "command") continue;
      if (value.is_object()) {
        if (global && find_sub(key)) continue;
        throw ConfigError("config section '" + key + "' is not a subcommand");
      }
      const std::string flag = "--" + key;
      const CLI::Option* opt = owner.get_option_no_throw(flag);
      if (!opt) {
        throw ConfigError("config key '" + key + "' is not an option of " +
                          (global ? std::string("mbco") : owner.get_name()));
      }
      bool present;
      if (global) {
        present = flag_present(args, flag, 0, sub_pos) ||
                  (sub && !sub->get_option_no_throw(flag) && flag_present(args, flag, sub_pos + 1, args.size()));
      } else {
        present = !append_command && flag_present(args, flag, sub_pos + 1, args.size());
      }
      if (present || value.is_null()) continue;
      if (value.is_boolean() && opt->get_expected_min() == 0) {
        if (value.get<bool>()) out.push_back(flag);
        continue;
      }
      if (value.is_array()) {
        if (value.empty()) continue;
        out.push_back(flag);
        for (const Json& e : value) out.push_back(scalar_text(e));
        continue;
      }
      if (value.is_string() && value.get<std::string>().empty()) continue;
      out.push_back(flag);
      out.push_back(scalar_text(value));
    }
    return out;
  };

  std::vector<std::string> merged = tokens_for(cfg, app, true);
  std::vector<std::string> sub_tokens;
  if (sub && cfg.contains(sub->get_name())) sub_tokens = tokens_for(cfg[sub->get_name()], *sub, false);

  if (append_command) {
    merged.insert(merged.end(), args.begin(), args.end());
    merged.push_back(sub->get_name());
    merged.insert(merged.end(), sub_tokens.begin(), sub_tokens.end());
  } else if (sub) {
    merged.insert(merged.end(), args.begin(), args.begin() + static_cast<long>(sub_pos) + 1);
    merged.insert(merged.end(), sub_tokens.begin(), sub_tokens.end());
    merged.insert(merged.end(), args.begin() + static_cast<long>(sub_pos) + 1, args.end());
  } else {
    merged.insert(merged.end(), args.begin(), args.end());
  }
  return merged;
}

}  // namespace mbco::cli
