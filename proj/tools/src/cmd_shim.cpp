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
#include <fstream>
#include <optional>

#include "context.hpp"
#include "mbco/csv_io.hpp"
#include "mbco/errors.hpp"
#include "mbco/shim.hpp"
#include "svg.hpp"

namespace mbco::cli {
namespace {

std::optional<double> pearson(const std::vector<double>& a, const std::vector<double>& b) {
  const double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (size_t i = 0; i < a.size(); ++i) ma += a[i] / n, mb += b[i] / n;
  double sab = 0, saa = 0, sbb = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0 || sbb == 0) return std::nullopt;
  return sab / std::sqrt(saa * sbb);
}

void histogram(const std::vector<double>& v, double lo, double hi, int bins,
               std::vector<double>& edges, std::vector<double>& counts) {
  edges.resize(bins + 1);
  counts.assign(bins, 0.0);
  for (int i = 0; i <= bins; ++i) edges[i] = lo + (hi - lo) * i / bins;
  for (double x : v) {
    int b = static_cast<int>(std::floor((x - lo) / (hi - lo) * bins));
    counts[std::clamp(b, 0, bins - 1)] += 1.0;
  }
}

class ShimCommand final : public Command {
 public:
  std::string name() const override { return "shim"; }
  std::string description() const override {
    return "Shim calibration against a simulated sampler with injected biases";
  }

  void bind(CLI::App& sub) override {
    sub.add_option("--n", n_, "Chain length (multiple of 4)")->capture_default_str();
    sub.add_option("--j", j_, "Mean coupling J")->capture_default_str();
    sub.add_option("--delta", delta_, "Staggering")->capture_default_str();
    sub.add_option("--strong-parity", strong_parity_, "Parity of the strong bonds")->capture_default_str();
    sub.add_option("--eta-phi", cfg_.eta_phi, "Flux-bias learning rate")->capture_default_str();
    sub.add_option("--eta-j", cfg_.eta_j, "Coupler learning rate")->capture_default_str();
    sub.add_option("--iterations", cfg_.iterations, "Maximum shim iterations")->capture_default_str();
    sub.add_option("--shots", cfg_.shots, "Samples per iteration")->capture_default_str();
    sub.add_option("--gauges", cfg_.n_gauges, "Spin-reversal gauges per iteration")->capture_default_str();
    sub.add_option("--m-threshold", cfg_.m_threshold, "Stop when every |m_orbit| is below this")
        ->capture_default_str();
    sub.add_option("--pfrust-threshold", cfg_.pfrust_threshold,
                   "Stop when every orbit Std[p_frust] is below this")
        ->capture_default_str();
    sub.add_option("--sigma-factor", cfg_.sigma_factor,
                   "Also require sigma_mtilde < factor/sqrt(shots); <= 0 disables")
        ->capture_default_str();
    sub.add_option("--j-scale", cfg_.j_scale, "Programmed strength of the strong bonds")
        ->capture_default_str();
    sub.add_option("--flux-update", flux_update_, "qubit|orbit")->capture_default_str();
    sub.add_option("--bias", bias_, "Hidden per-qubit bias amplitude (uniform +/-)")
        ->capture_default_str();
    sub.add_option("--coupler-error", coupler_error_, "Relative coupler error amplitude")
        ->capture_default_str();
    sub.add_option("--t-eff", t_eff_, "Sampler temperature in units of |J|")->capture_default_str();
    sub.add_option("--sweeps", sweeps_, "Metropolis sweeps per sample")->capture_default_str();
  }

  Json resolved() const override {
    return Json{{"n", n_},
                {"j", j_},
                {"delta", delta_},
                {"strong-parity", strong_parity_},
                {"eta-phi", cfg_.eta_phi},
                {"eta-j", cfg_.eta_j},
                {"iterations", cfg_.iterations},
                {"shots", cfg_.shots},
                {"gauges", cfg_.n_gauges},
                {"m-threshold", cfg_.m_threshold},
                {"pfrust-threshold", cfg_.pfrust_threshold},
                {"sigma-factor", cfg_.sigma_factor},
                {"j-scale", cfg_.j_scale},
                {"flux-update", flux_update_},
                {"bias", bias_},
                {"coupler-error", coupler_error_},
                {"t-eff", t_eff_},
                {"sweeps", sweeps_}};
  }

  int run(RunContext& ctx) override {
    ChainSpec chain;
    chain.n = n_;
    chain.j = j_;
    chain.delta = delta_;
    chain.strong_bond_parity = parse_bond_parity(strong_parity_);
    chain.validate();

    ShimConfig cfg = cfg_;
    cfg.mode = parse_flux_update(flux_update_);
    cfg.seed = ctx.global.seed;
    cfg.threads = ctx.threads();
    cfg.validate();
    NoisySamplerConfig sampler = random_faults(n_, bias_, coupler_error_, ctx.global.seed);
    sampler.t_eff = t_eff_;
    sampler.sweeps = sweeps_;

    const ShimResult res = run_shim(chain, sampler, cfg);
    const auto& hist = res.state.history;
    const auto dir = ctx.out_dir();

    CsvTable table{{"iter", "orbit_id", "m", "std_pfrust", "sigma_mtilde"}, {}};
    Json phi = Json::array(), jprog = Json::array(), mq = Json::array(), sig = Json::array();
    std::vector<double> iters, sigma;
    for (const ShimIteration& h : hist) {
      const size_t orbits = std::max(h.stats.m_orbit.size(), h.stats.std_pfrust.size());
      for (size_t o = 0; o < orbits; ++o) {
        table.rows.push_back({static_cast<double>(h.iteration), static_cast<double>(o),
                              o < h.stats.m_orbit.size() ? h.stats.m_orbit[o] : 0.0,
                              o < h.stats.std_pfrust.size() ? h.stats.std_pfrust[o] : 0.0,
                              h.stats.sigma_mtilde});
      }
      phi.push_back(h.phi);
      jprog.push_back(h.j_prog);
      mq.push_back(h.stats.m_qubit);
      sig.push_back(h.stats.sigma_mtilde);
      iters.push_back(h.iteration);
      sigma.push_back(h.stats.sigma_mtilde);
    }
    write_csv_file(dir / "shim_history.csv", table);

    std::vector<double> neg_phi(res.state.phi.size());
    for (size_t i = 0; i < neg_phi.size(); ++i) neg_phi[i] = -res.state.phi[i];
    const auto corr = pearson(neg_phi, sampler.hidden_bias);
    double max_m = 0.0;
    for (double m : res.final_stats.m_orbit) max_m = std::max(max_m, std::abs(m));

    Json report{{"converged", res.converged},
                {"iterations_sampled", hist.size()},
                {"final_max_abs_m_orbit", max_m},
                {"final_sigma_mtilde", res.final_stats.sigma_mtilde},
                {"corr_neg_phi_hidden_bias", corr ? Json(*corr) : Json(nullptr)}};
    Json traj{{"hidden_bias", sampler.hidden_bias},
              {"coupler_error", sampler.coupler_error},
              {"phi", phi},
              {"j_prog", jprog},
              {"m_qubit", mq},
              {"sigma_mtilde", sig},
              {"final_phi", res.state.phi},
              {"final_j_prog", res.state.j_prog},
              {"report", report}};
    std::ofstream(dir / "shim_trajectories.json") << traj.dump(2) << '\n';

    write_panels(dir, hist, iters, sigma);
    write_manifest(ctx, resolved(), Json{{"shim", report}});

    *ctx.out << (res.converged ? "converged" : "NOT converged") << " after " << hist.size()
             << " sampled iterations; max |m_orbit| = " << max_m;
    if (corr) *ctx.out << "; corr(-phi, hidden bias) = " << *corr;
    *ctx.out << '\n';
    return kExitOk;
  }

 private:
  static void write_panels(const std::filesystem::path& dir, const std::vector<ShimIteration>& hist,
                           const std::vector<double>& iters, const std::vector<double>& sigma) {
    if (hist.empty()) return;
    {
      double lim = 1e-3;
      for (const auto* h : {&hist.front(), &hist.back()}) {
        for (double m : h->stats.m_qubit) lim = std::max(lim, std::abs(m));
      }
      SvgPlot p("(a) qubit magnetizations m~", "m~", "qubits");
      std::vector<double> e, c;
      histogram(hist.front().stats.m_qubit, -lim, lim, 20, e, c);
      p.add_bars(e, c, "iteration " + std::to_string(hist.front().iteration));
      histogram(hist.back().stats.m_qubit, -lim, lim, 20, e, c);
      p.add_bars(e, c, "iteration " + std::to_string(hist.back().iteration));
      p.write(dir / "shim_a_magnetization.svg");
    }
    auto trajectories = [&](const char* title, const char* ylabel, auto member, const char* file) {
      SvgPlot p(title, "iteration", ylabel);
      const size_t count = (hist.front().*member).size();
      for (size_t i = 0; i < count; ++i) {
        std::vector<double> y;
        for (const ShimIteration& h : hist) y.push_back((h.*member)[i]);
        p.add_line(iters, y, i < 8 ? "#" + std::to_string(i) : std::string());
      }
      p.write(dir / file);
    };
    trajectories("(b) programmed couplers", "J_prog", &ShimIteration::j_prog, "shim_b_couplers.svg");
    trajectories("(c) flux-bias offsets", "phi", &ShimIteration::phi, "shim_c_flux.svg");
    SvgPlot p("(d) spread of m~ across qubits", "iteration", "sigma_m~");
    p.add_line(iters, sigma, "sigma_m~");
    p.write(dir / "shim_d_sigma.svg");
  }

  int n_ = 16;
  double j_ = 1.0;
  double delta_ = 0.2;
  std::string strong_parity_ = "even";
  ShimConfig cfg_;
  std::string flux_update_ = "qubit";
  double bias_ = 0.05;
  double coupler_error_ = 0.0;
  double t_eff_ = 1.0;
  int sweeps_ = 20;
};

}  // namespace

std::unique_ptr<Command> make_shim_command() { return std::make_unique<ShimCommand>(); }

}  // namespace mbco::cli
