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


#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>

#include "context.hpp"
#include "mbco/csv_io.hpp"
#include "mbco/errors.hpp"
#include "mbco/observables.hpp"
#include "svg.hpp"

namespace mbco::cli {
namespace {

class SweepCommand final : public Command {
 public:
  std::string name() const override { return "sweep"; }
  std::string description() const override {
    return "Quench sweep over anneal times: writes pt_series.csv and quench_results.csv";
  }

  void bind(CLI::App& sub) override {
    model_.bind(sub);
    taus_.bind(sub);
    sub.add_option("--disorder", disorder_, "Transverse-field disorder strength d");
    sub.add_option("--realizations", realizations_, "Disorder realizations per anneal time")
        ->capture_default_str();
    sub.add_flag("--kz-fit", kz_fit_, "Fit K ~ tau^a over the tau grid");
    sub.add_option("--kz-min", kz_min_, "Lower tau bound of the fit (default: grid start)");
    sub.add_option("--kz-max", kz_max_, "Upper tau bound of the fit (default: grid end)");
  }

  Json resolved() const override {
    Json j;
    model_.to_json(j);
    taus_.to_json(j);
    j["disorder"] = disorder_ ? Json(*disorder_) : Json(nullptr);
    j["realizations"] = realizations_;
    j["kz-fit"] = kz_fit_;
    j["kz-min"] = kz_min_ ? Json(*kz_min_) : Json(nullptr);
    j["kz-max"] = kz_max_ ? Json(*kz_max_) : Json(nullptr);
    return j;
  }

  int run(RunContext& ctx) override {
    const ChainSpec chain = model_.chain();
    const AnnealSchedule schedule = model_.schedule();
    const std::vector<double> grid = taus_.grid();

    SweepOptions opts;
    opts.evolve.tol = ctx.global.tol;
    opts.threads = ctx.threads();
    opts.grid = model_.momentum_grid();
    if (realizations_ < 1) throw ConfigError("--realizations must be >= 1");
    if (disorder_) {
      opts.disorder = DisorderOptions{*disorder_, realizations_, ctx.global.seed};
    } else if (realizations_ != 1) {
      throw ConfigError("--realizations needs --disorder");
    }

    const std::vector<QuenchResult> results = quench_sweep(chain, schedule, grid, opts);

    CsvTable series{{"tau_ns", "P", "K", "stderr_P"}, {}};
    CsvTable full{{"tau_ns", "K", "P", "p_strong", "p_weak", "stderr_K", "stderr_P", "realizations"}, {}};
    std::vector<double> tau, p, k;
    for (const QuenchResult& q : results) {
      series.rows.push_back({q.tau_ns, q.staggered_diff, q.kink_density, q.staggered_stderr});
      full.rows.push_back({q.tau_ns, q.kink_density, q.staggered_diff, q.p_strong, q.p_weak,
                           q.kink_stderr, q.staggered_stderr, static_cast<double>(q.realizations)});
      tau.push_back(q.tau_ns);
      p.push_back(q.staggered_diff);
      k.push_back(q.kink_density);
    }
    const auto dir = ctx.out_dir();
    write_csv_file(dir / "pt_series.csv", series);
    write_csv_file(dir / "quench_results.csv", full);

    SvgPlot plot("Defect observables after the quench", "anneal time tau (ns)", "density");
    plot.add_line(tau, p, "P");
    plot.add_line(tau, k, "K");
    plot.write(dir / "pt_series.svg");

    Json extra;
    if (kz_fit_) {
      const double lo = kz_min_.value_or(grid.front());
      const double hi = kz_max_.value_or(grid.back());
      const KzFit fit = kz_fit(results, lo, hi);
      Json j{{"tau_lo_ns", lo}, {"tau_hi_ns", hi}, {"exponent", fit.exponent},
             {"amplitude", fit.amplitude}, {"r2", fit.r2}, {"points", fit.points}};
      std::ofstream(dir / "kz_fit.json") << j.dump(2) << '\n';
      *ctx.out << "Kibble-Zurek fit: K ~ " << fit.amplitude << " * tau^" << fit.exponent
               << " (r2 = " << fit.r2 << ", " << fit.points << " points)\n";
      extra["kz_fit"] = j;
    }
    if (opts.disorder) extra["disorder_model"] = "8-state blocks with elastic backscattering";

    write_manifest(ctx, resolved(), extra);
    *ctx.out << "wrote " << results.size() << " anneal times to " << (dir / "pt_series.csv").string()
             << '\n';
    return kExitOk;
  }

 private:
  ModelArgs model_;
  TauGridArgs taus_;
  std::optional<double> disorder_;
  int realizations_ = 1;
  bool kz_fit_ = false;
  std::optional<double> kz_min_, kz_max_;
};

}  // namespace

std::unique_ptr<Command> make_sweep_command() { return std::make_unique<SweepCommand>(); }

}  // namespace mbco::cli
