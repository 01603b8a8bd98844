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


#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "context.hpp"
#include "mbco/csv_io.hpp"
#include "mbco/disorder.hpp"
#include "mbco/ed_oracle.hpp"
#include "mbco/errors.hpp"
#include "mbco/observables.hpp"

namespace mbco::cli {
namespace {

class OracleCommand final : public Command {
 public:
  OracleCommand() {
    model_.n = 8;
    model_.delta = 0.2;
  }

  std::string name() const override { return "oracle"; }
  std::string description() const override {
    return "Cross-check the block solver against exact diagonalization (N <= 12)";
  }

  void bind(CLI::App& sub) override {
    model_.bind(sub);
    sub.add_option("--tau", taus_, "Anneal times to compare, ns")->delimiter(',')->capture_default_str();
    sub.add_option("--disorder", disorder_, "Field disorder d (8-state blocks are then approximate)");
    sub.add_option("--tol", tol_, "Largest accepted |difference| in K and P")->capture_default_str();
  }

  Json resolved() const override {
    Json j;
    model_.to_json(j);
    j["tau"] = taus_;
    j["disorder"] = disorder_ ? Json(*disorder_) : Json(nullptr);
    j["tol"] = tol_;
    return j;
  }

  int run(RunContext& ctx) override {
    if (model_.n > DenseQuenchProblem::kMaxSites) {
      throw ConfigError("oracle needs N <= " + std::to_string(DenseQuenchProblem::kMaxSites) +
                        " (got " + std::to_string(model_.n) + ")");
    }
    if (taus_.empty()) throw ConfigError("--tau needs at least one value");
    if (!(tol_ > 0.0)) throw ConfigError("--tol must be positive");
    const ChainSpec chain = model_.chain();
    const AnnealSchedule schedule = model_.schedule();

    SweepOptions opts;
    opts.evolve.tol = ctx.global.tol;
    opts.grid = model_.momentum_grid();
    std::optional<DisorderRealization> dis;
    if (disorder_) dis = sample_disorder(*disorder_, chain.n, ctx.global.seed, 0, opts.grid);

    CsvTable table{{"tau_ns", "K_block", "K_ed", "dK", "P_block", "P_ed", "dP"}, {}};
    double worst = 0.0;
    std::ostream& out = *ctx.out;
    char line[200];
    std::snprintf(line, sizeof(line), "%10s %14s %14s %10s %14s %14s %10s\n", "tau_ns", "K_block",
                  "K_ed", "|dK|", "P_block", "P_ed", "|dP|");
    out << line;
    for (double tau : taus_) {
      const QuenchResult q =
          assemble_result(tau, evolve_chain(chain, schedule, tau, opts, dis ? &*dis : nullptr), chain);
      DenseQuenchProblem problem;
      problem.chain = chain;
      problem.schedule = schedule;
      problem.tau_ns = tau;
      if (dis) problem.h_site = dis->h_site;
      const EdObservables ed = ed_observables(ed_evolve(problem).state, chain);
      const double dk = std::abs(q.kink_density - ed.kink_density);
      const double dp = std::abs(q.staggered_diff - ed.staggered_diff);
      worst = std::max({worst, dk, dp});
      table.rows.push_back({tau, q.kink_density, ed.kink_density, dk, q.staggered_diff,
                            ed.staggered_diff, dp});
      std::snprintf(line, sizeof(line), "%10.4g %14.10f %14.10f %10.2e %14.10f %14.10f %10.2e\n", tau,
                    q.kink_density, ed.kink_density, dk, q.staggered_diff, ed.staggered_diff, dp);
      out << line;
    }
    write_csv_file(ctx.out_dir() / "oracle.csv", table);

    const bool approximate = dis.has_value();
    const bool pass = worst <= tol_;
    Json verdict{{"max_abs_diff", worst},
                 {"tol", tol_},
                 {"status", approximate ? "approximation" : (pass ? "pass" : "fail")}};
    write_manifest(ctx, resolved(), Json{{"oracle", verdict}});
    if (approximate) {
      out << "approximation: disordered blocks keep only k <-> -k backscattering; max |diff| = "
          << worst << " (not gated)\n";
      return kExitOk;
    }
    out << (pass ? "pass" : "FAIL") << ": max |diff| = " << worst << " (tol " << tol_ << ")\n";
    return pass ? kExitOk : kExitMismatch;
  }

 private:
  ModelArgs model_;
  std::vector<double> taus_{1.0, 5.0, 10.0};
  std::optional<double> disorder_;
  double tol_ = 1e-6;
};

}  // namespace

std::unique_ptr<Command> make_oracle_command() { return std::make_unique<OracleCommand>(); }

}  // namespace mbco::cli
