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
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "context.hpp"
#include "mbco/csv_io.hpp"
#include "mbco/errors.hpp"
#include "mbco/observables.hpp"
#include "mbco/shots.hpp"
#include "mbco/spectral.hpp"
#include "svg.hpp"

namespace mbco::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string number_tag(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

Json nullable(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

// Rebuilds per-sublattice probabilities from a P,K series: p_weak = K + P and
// p_strong = K - P.
std::vector<QuenchResult> results_from_series(const CsvTable& table) {
  const auto tau = table.column_values("tau_ns");
  const auto p = table.column_values("P");
  const auto k = table.column_values("K");
  std::vector<QuenchResult> out(tau.size());
  for (size_t i = 0; i < tau.size(); ++i) {
    QuenchResult& q = out[i];
    q.tau_ns = tau[i];
    q.staggered_diff = p[i];
    q.kink_density = k[i];
    q.p_weak = k[i] + p[i];
    q.p_strong = k[i] - p[i];
    const double slack = 1e-12;
    if (q.p_weak < -slack || q.p_weak > 1 + slack || q.p_strong < -slack || q.p_strong > 1 + slack) {
      throw ConfigError("series row tau=" + number_tag(tau[i]) +
                        " implies bond kink probabilities outside [0, 1]");
    }
    q.p_weak = std::clamp(q.p_weak, 0.0, 1.0);
    q.p_strong = std::clamp(q.p_strong, 0.0, 1.0);
  }
  return out;
}

struct Analysis {
  Spectrum theory;
  std::optional<Spectrum> shots;
  std::optional<std::size_t> dominant;
  std::optional<PeakReport> peak;
};

class SpectrumCommand final : public Command {
 public:
  SpectrumCommand() {
    taus_.tau_min = 0.02;
    taus_.tau_max = 20.0;
    taus_.points = 1000;
  }

  std::string name() const override { return "spectrum"; }
  std::string description() const override {
    return "Fourier spectrum S(Omega) of P(tau), optional shot-noise bootstrap and peak test";
  }

  void bind(CLI::App& sub) override {
    model_.bind(sub);
    taus_.bind(sub);
    sub.add_option("--series", series_path_, "Existing series CSV (tau_ns,P,K,...) instead of a sweep");
    sub.add_option("--quantity", quantity_, "Series to transform (P|K)")->capture_default_str();
    sub.add_option("--window", window_, "Anneal-time window lo hi, ns")->expected(2);
    sub.add_option("--detrend", detrend_, "none|mean|linear")->capture_default_str();
    sub.add_option("--shots", shots_, "Simulated anneals per tau (0 = no noise estimate)")
        ->capture_default_str();
    sub.add_option("--series-count", series_count_, "Artificial series in the bootstrap")
        ->capture_default_str();
    sub.add_option("--baseline", baseline_, "Noise baseline band lo hi, GHz")->expected(2);
    sub.add_option("--search", search_, "Peak search band lo hi, GHz")->expected(2);
    sub.add_option("--gamma0-list", gamma0_list_, "Compare several Gamma(0) values, GHz")
        ->delimiter(',');
  }

  Json resolved() const override {
    Json j;
    model_.to_json(j);
    taus_.to_json(j);
    j["series"] = series_path_;
    j["quantity"] = quantity_;
    j["window"] = window_;
    j["detrend"] = detrend_;
    j["shots"] = shots_;
    j["series-count"] = series_count_;
    j["baseline"] = baseline_;
    j["search"] = search_;
    j["gamma0-list"] = gamma0_list_;
    return j;
  }

  int run(RunContext& ctx) override {
    if (quantity_ != "P" && quantity_ != "K") throw ConfigError("--quantity must be P or K");
    if (shots_ < 0) throw ConfigError("--shots must be >= 0");
    if (shots_ > 0 && series_count_ < 2) throw ConfigError("--series-count must be >= 2");
    if (shots_ > 0 && shots_ < series_count_) {
      throw ConfigError("--shots must be at least --series-count");
    }
    options_.detrend = parse_detrend(detrend_);
    if (!window_.empty()) {
      options_.window_lo_ns = window_[0];
      options_.window_hi_ns = window_[1];
    }
    const auto dir = ctx.out_dir();
    Json extra;

    if (!gamma0_list_.empty()) {
      if (!series_path_.empty()) throw ConfigError("--gamma0-list needs sweep parameters, not --series");
      CsvTable peaks{{"gamma0_GHz", "Omega_GHz", "S", "sigma", "significance"}, {}};
      SvgPlot overlay("S(Omega) for several Gamma(0)", "Omega (GHz)", "S");
      Json reports = Json::array();
      for (double g : gamma0_list_) {
        if (!(g > 0.0)) throw ConfigError("--gamma0-list values must be positive");
        const auto results = sweep(ctx, model_.schedule_with_gamma0(g));
        const std::string tag = "_gamma0_" + number_tag(g);
        const Analysis a = analyze(ctx, results, tag, 0x6a3a0000ULL + peaks.rows.size());
        overlay.add_line(a.theory.omega_ghz, a.theory.amplitude, "Gamma0 = " + number_tag(g));
        Json r = report(a);
        r["gamma0_GHz"] = g;
        reports.push_back(r);
        peaks.rows.push_back(peak_row(g, a));
        *ctx.out << "Gamma0 = " << g << " GHz: " << summary(a) << '\n';
      }
      write_csv_file(dir / "gamma0_peaks.csv", peaks);
      overlay.write(dir / "gamma0_spectra.svg");
      std::ofstream(dir / "peaks.json") << reports.dump(2) << '\n';
      extra["peaks"] = reports;
    } else {
      std::vector<QuenchResult> results;
      if (!series_path_.empty()) {
        results = results_from_series(read_csv_file(series_path_));
      } else {
        results = sweep(ctx, model_.schedule());
      }
      const Analysis a = analyze(ctx, results, "", 0x6a3a0000ULL);
      const Json r = report(a);
      std::ofstream(dir / "peak.json") << r.dump(2) << '\n';
      extra["peak"] = r;
      *ctx.out << summary(a) << '\n';
    }
    if (shots_ > 0) {
      extra["shot_model"] = "independent per-bond Bernoulli marginals";
    }
    write_manifest(ctx, resolved(), extra);
    return kExitOk;
  }

 private:
  std::vector<QuenchResult> sweep(const RunContext& ctx, const AnnealSchedule& schedule) const {
    SweepOptions opts;
    opts.evolve.tol = ctx.global.tol;
    opts.threads = ctx.threads();
    opts.grid = model_.momentum_grid();
    return quench_sweep(model_.chain(), schedule, taus_.grid(), opts);
  }

  double search_lo() const { return search_.empty() ? 1.0 : search_[0]; }
  double search_hi(const Spectrum& s) const {
    return search_.empty() ? s.nyquist_ghz() : search_[1];
  }

  Analysis analyze(const RunContext& ctx, const std::vector<QuenchResult>& results,
                   const std::string& tag, std::uint64_t stream) const {
    const auto dir = ctx.out_dir();
    const Quantity quantity = quantity_ == "P" ? Quantity::kStaggeredDiff : Quantity::kKinkDensity;
    Analysis a;
    a.theory = analyze_series(make_series(results, quantity), options_);
    a.dominant = dominant_peak_bin(a.theory, search_lo(), search_hi(a.theory));

    SvgPlot plot("Fourier spectrum of " + quantity_ + "(tau)", "Omega (GHz)", "S");
    if (shots_ > 0) {
      if (quantity != Quantity::kStaggeredDiff) {
        throw ConfigError("the shot-noise bootstrap is defined for P only");
      }
      const ChainSpec chain = model_.chain();
      const GroupEstimates groups = sample_group_estimates(
          results, chain, shots_, series_count_, ctx.global.seed ^ stream, ctx.threads());
      const NoiseEstimate noise = bootstrap_spectra(groups, options_, ctx.threads());
      attach_noise(a.theory, noise);
      Spectrum measured = analyze_series(groups.pooled(), options_);
      attach_noise(measured, noise);

      const double band_lo = baseline_.empty() ? 0.5 * a.theory.nyquist_ghz() : baseline_[0];
      const double band_hi = baseline_.empty() ? a.theory.nyquist_ghz() : baseline_[1];
      a.peak = detect_peak(a.theory, band_lo, band_hi, search_lo(), search_hi(a.theory));

      std::vector<double> lo(a.theory.size()), hi(a.theory.size());
      for (size_t i = 0; i < lo.size(); ++i) {
        lo[i] = a.peak->baseline - 2.0 * a.theory.sigma[i];
        hi[i] = a.peak->baseline + 2.0 * a.theory.sigma[i];
      }
      plot.add_band(a.theory.omega_ghz, lo, hi);
      plot.add_line(measured.omega_ghz, measured.amplitude, "simulated shots");
      write_spectrum(dir / ("spectrum_shots" + tag + ".csv"), measured);
      a.shots = std::move(measured);
    }
    plot.add_line(a.theory.omega_ghz, a.theory.amplitude, "theory");
    plot.write(dir / ("spectrum" + tag + ".svg"));
    write_spectrum(dir / ("spectrum" + tag + ".csv"), a.theory);
    return a;
  }

  static void write_spectrum(const std::filesystem::path& path, const Spectrum& s) {
    CsvTable t{{"Omega_GHz", "S", "sigma"}, {}};
    for (size_t i = 0; i < s.size(); ++i) {
      t.rows.push_back({s.omega_ghz[i], s.amplitude[i], s.sigma.empty() ? kNaN : s.sigma[i]});
    }
    write_csv_file(path, t);
  }

  static Json report(const Analysis& a) {
    Json r{{"resolution_GHz", a.theory.resolution_ghz()},
           {"nyquist_GHz", a.theory.nyquist_ghz()},
           {"window_ns", {a.theory.window_lo_ns, a.theory.window_hi_ns}},
           {"samples", a.theory.samples}};
    if (a.dominant) {
      r["dominant_peak"] = {{"Omega_GHz", a.theory.omega_ghz[*a.dominant]},
                            {"S", a.theory.amplitude[*a.dominant]}};
    } else {
      r["dominant_peak"] = nullptr;
    }
    if (a.peak) {
      r["significance_test"] = {{"Omega_GHz", a.peak->omega_ghz},
                                {"S", a.peak->amplitude},
                                {"baseline", a.peak->baseline},
                                {"sigma", a.peak->sigma},
                                {"significance", nullable(a.peak->significance)}};
    }
    return r;
  }

  static std::vector<double> peak_row(double g, const Analysis& a) {
    if (!a.dominant) return {g, kNaN, kNaN, kNaN, kNaN};
    const size_t b = *a.dominant;
    double sigma = kNaN, z = kNaN;
    if (a.peak && !a.theory.sigma.empty()) {
      sigma = a.theory.sigma[b];
      z = sigma > 0 ? (a.theory.amplitude[b] - a.peak->baseline) / sigma : kNaN;
    }
    return {g, a.theory.omega_ghz[b], a.theory.amplitude[b], sigma, z};
  }

  static std::string summary(const Analysis& a) {
    std::ostringstream s;
    if (a.dominant) {
      s << "dominant peak at " << a.theory.omega_ghz[*a.dominant] << " GHz, S = "
        << a.theory.amplitude[*a.dominant];
    } else {
      s << "no local maximum in the search band";
    }
    if (a.peak) {
      s << "; most significant bin " << a.peak->omega_ghz << " GHz at " << a.peak->significance
        << " sigma";
    }
    return s.str();
  }

  ModelArgs model_;
  TauGridArgs taus_;
  std::string series_path_;
  std::string quantity_ = "P";
  std::vector<double> window_;
  std::string detrend_ = "mean";
  int shots_ = 0;
  int series_count_ = 100;
  std::vector<double> baseline_;
  std::vector<double> search_;
  std::vector<double> gamma0_list_;
  SpectrumOptions options_;
};

}  // namespace

std::unique_ptr<Command> make_spectrum_command() { return std::make_unique<SpectrumCommand>(); }

}  // namespace mbco::cli
