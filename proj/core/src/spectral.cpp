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

#include "mbco/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include <fftw3.h>

#include "mbco/errors.hpp"

namespace mbco {
namespace {

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

std::vector<double> dft_magnitudes(const std::vector<double>& x) {
  RealDft dft(x.size());
  std::vector<double> mag(dft.bins());
  dft.magnitudes(x.data(), mag.data());
  return mag;
}

}  // namespace

struct RealDft::Impl {
  double* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;
};

RealDft::RealDft(std::size_t length) : length_(length), impl_(std::make_unique<Impl>()) {
  if (length < 2) throw ConfigError("transform length must be at least 2");
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  impl_->in = fftw_alloc_real(length);
  impl_->out = fftw_alloc_complex(bins());
  impl_->plan = fftw_plan_dft_r2c_1d(static_cast<int>(length), impl_->in, impl_->out, FFTW_ESTIMATE);
}

RealDft::~RealDft() {
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  fftw_destroy_plan(impl_->plan);
  fftw_free(impl_->in);
  fftw_free(impl_->out);
}

void RealDft::magnitudes(const double* x, double* out) {
  std::copy(x, x + length_, impl_->in);
  fftw_execute(impl_->plan);
  for (std::size_t i = 0; i < bins(); ++i) {
    out[i] = std::hypot(impl_->out[i][0], impl_->out[i][1]);
  }
}

double TauSeries::spacing() const {
  if (tau_ns.size() != values.size()) throw ConfigError("series has mismatched tau and value lengths");
  if (tau_ns.size() < 2) throw ConfigError("series needs at least two points");
  const double dtau = (tau_ns.back() - tau_ns.front()) / static_cast<double>(tau_ns.size() - 1);
  if (!(dtau > 0.0)) throw ConfigError("series tau grid must be increasing");
  for (std::size_t i = 0; i < tau_ns.size(); ++i) {
    if (std::abs(tau_ns[i] - (tau_ns.front() + dtau * static_cast<double>(i))) > 1e-12 * std::max(1.0, std::abs(tau_ns[i]))) {
      throw ConfigError("series tau grid is not uniform");
    }
  }
  return dtau;
}

TauSeries make_series(const std::vector<QuenchResult>& results, Quantity quantity) {
  TauSeries s;
  s.meta = quantity == Quantity::kStaggeredDiff ? "P" : "K";
  for (const QuenchResult& q : results) {
    s.tau_ns.push_back(q.tau_ns);
    s.values.push_back(quantity == Quantity::kStaggeredDiff ? q.staggered_diff : q.kink_density);
  }
  return s;
}

Detrend parse_detrend(const std::string& text) {
  if (text == "none") return Detrend::kNone;
  if (text == "mean") return Detrend::kMean;
  if (text == "linear") return Detrend::kLinear;
  throw ConfigError("detrend must be none, mean or linear");
}

TauSeries detrend_and_window(const TauSeries& series, double lo_ns, double hi_ns, Detrend detrend) {
  const double dtau = series.spacing();
  const double eps = 1e-9 * dtau;
  TauSeries out;
  out.meta = series.meta;
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (series.tau_ns[i] >= lo_ns - eps && series.tau_ns[i] <= hi_ns + eps) {
      out.tau_ns.push_back(series.tau_ns[i]);
      out.values.push_back(series.values[i]);
    }
  }
  if (out.size() < 8) throw ConfigError("window keeps fewer than 8 grid points");

  const double n = static_cast<double>(out.size());
  if (detrend == Detrend::kMean) {
    double mean = 0.0;
    for (double v : out.values) mean += v / n;
    for (double& v : out.values) v -= mean;
  } else if (detrend == Detrend::kLinear) {
    double mt = 0.0, mv = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      mt += out.tau_ns[i] / n;
      mv += out.values[i] / n;
    }
    double stt = 0.0, stv = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      stt += (out.tau_ns[i] - mt) * (out.tau_ns[i] - mt);
      stv += (out.tau_ns[i] - mt) * (out.values[i] - mv);
    }
    const double slope = stv / stt;
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.values[i] -= mv + slope * (out.tau_ns[i] - mt);
    }
  }
  return out;
}

Spectrum spectrum(const TauSeries& series) {
  const double dtau = series.spacing();
  if (series.size() < 8) throw ConfigError("spectrum needs at least 8 samples");
  Spectrum spec;
  spec.samples = series.size();
  spec.dtau_ns = dtau;
  spec.window_lo_ns = series.tau_ns.front();
  spec.window_hi_ns = series.tau_ns.back();
  spec.amplitude = dft_magnitudes(series.values);
  const double m = static_cast<double>(series.size());
  spec.omega_ghz.resize(spec.amplitude.size());
  for (std::size_t i = 0; i < spec.omega_ghz.size(); ++i) {
    spec.omega_ghz[i] = static_cast<double>(i) / (m * dtau);
  }
  return spec;
}

Spectrum analyze_series(const TauSeries& series, const SpectrumOptions& options) {
  return spectrum(detrend_and_window(series, options.window_lo_ns, options.window_hi_ns, options.detrend));
}

PeakReport detect_peak(const Spectrum& spec, double band_lo_ghz, double band_hi_ghz,
                       double search_lo_ghz, double search_hi_ghz) {
  if (spec.sigma.size() != spec.size()) throw ConfigError("peak detection needs a noise level per bin");
  double baseline = 0.0;
  int band_bins = 0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec.omega_ghz[i] >= band_lo_ghz && spec.omega_ghz[i] <= band_hi_ghz) {
      baseline += spec.amplitude[i];
      ++band_bins;
    }
  }
  if (band_bins == 0) throw ConfigError("baseline band holds no frequency bins");
  if (band_bins < 5) throw ConfigError("baseline band needs at least 5 frequency bins");
  baseline /= band_bins;

  PeakReport best;
  best.baseline = baseline;
  best.significance = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t i = 1; i < spec.size(); ++i) {
    const double omega = spec.omega_ghz[i];
    if (omega <= search_lo_ghz || omega > search_hi_ghz) continue;
    const double excess = spec.amplitude[i] - baseline;
    double z;
    if (spec.sigma[i] > 0.0) {
      z = excess / spec.sigma[i];
    } else {
      z = excess > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    if (!found || z > best.significance) {
      found = true;
      best.bin = i;
      best.omega_ghz = omega;
      best.amplitude = spec.amplitude[i];
      best.sigma = spec.sigma[i];
      best.significance = z;
    }
  }
  if (!found) throw ConfigError("peak search range holds no frequency bins");
  return best;
}

std::size_t dominant_bin(const Spectrum& spec, double omega_lo_ghz, double omega_hi_ghz) {
  std::size_t best = spec.size();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double omega = spec.omega_ghz[i];
    if (omega < omega_lo_ghz || omega > omega_hi_ghz) continue;
    if (best == spec.size() || spec.amplitude[i] > spec.amplitude[best]) best = i;
  }
  if (best == spec.size()) throw ConfigError("no frequency bins in the requested range");
  return best;
}

double local_max_amplitude(const Spectrum& spec, double omega_ghz, int bins) {
  const double res = spec.resolution_ghz();
  const long centre = std::lround(omega_ghz / res);
  double best = 0.0;
  for (long i = centre - bins; i <= centre + bins; ++i) {
    if (i < 0 || i >= static_cast<long>(spec.size())) continue;
    best = std::max(best, spec.amplitude[static_cast<std::size_t>(i)]);
  }
  return best;
}

std::optional<std::size_t> dominant_peak_bin(const Spectrum& spec, double omega_lo_ghz,
                                             double omega_hi_ghz) {
  std::optional<std::size_t> best;
  for (std::size_t i = 1; i + 1 < spec.size(); ++i) {
    const double omega = spec.omega_ghz[i];
    if (omega < omega_lo_ghz || omega > omega_hi_ghz) continue;
    const double a = spec.amplitude[i];
    if (!(a > spec.amplitude[i - 1] && a >= spec.amplitude[i + 1])) continue;
    if (!best || a > spec.amplitude[*best]) best = i;
  }
  return best;
}

}  // namespace mbco
