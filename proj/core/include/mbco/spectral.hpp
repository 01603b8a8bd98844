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

#ifndef MBCO_SPECTRAL_HPP
#define MBCO_SPECTRAL_HPP

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mbco/observables.hpp"

namespace mbco {

/// Observable sampled on a uniform grid of anneal times.
struct TauSeries {
  std::vector<double> tau_ns;
  std::vector<double> values;
  /// Free-form provenance, e.g. "P" or "K".
  std::string meta;

  std::size_t size() const { return values.size(); }
  /// Grid spacing; throws ConfigError unless uniform within 1e-12 ns.
  double spacing() const;
};

enum class Quantity { kStaggeredDiff, kKinkDensity };
TauSeries make_series(const std::vector<QuenchResult>& results,
                      Quantity quantity = Quantity::kStaggeredDiff);

enum class Detrend { kNone, kMean, kLinear };
Detrend parse_detrend(const std::string& text);

/// Keeps the grid points with tau in [lo, hi] and removes the chosen trend.
/// Needs at least 8 points inside the window.
TauSeries detrend_and_window(const TauSeries& series, double lo_ns, double hi_ns, Detrend detrend);

/// One-sided DFT magnitudes.
///
/// For M samples x_j the amplitude at Omega_m = m / (M dtau), m = 0 .. M/2, is
/// S_m = | sum_j x_j exp(-2 pi i j m / M) |, without normalization: a tone
/// A sin(2 pi Omega_0 tau) on the grid gives S = A M / 2 at Omega_0, and
/// S_0^2 + 2 sum_{0<m<M/2} S_m^2 (+ S_{M/2}^2 for even M) = M sum_j x_j^2.
struct Spectrum {
  std::vector<double> omega_ghz;
  std::vector<double> amplitude;
  /// Noise level per frequency; empty until attached from a bootstrap.
  std::vector<double> sigma;
  double window_lo_ns = 0.0;
  double window_hi_ns = 0.0;
  std::size_t samples = 0;
  double dtau_ns = 0.0;

  std::size_t size() const { return amplitude.size(); }
  double resolution_ghz() const { return 1.0 / (static_cast<double>(samples) * dtau_ns); }
  double nyquist_ghz() const { return 0.5 / dtau_ns; }
};

Spectrum spectrum(const TauSeries& series);

/// Reusable transform of fixed length for repeated spectra (bootstrap loops).
/// One instance must not be used from two threads at once.
class RealDft {
 public:
  explicit RealDft(std::size_t length);
  ~RealDft();
  RealDft(const RealDft&) = delete;
  RealDft& operator=(const RealDft&) = delete;

  std::size_t length() const { return length_; }
  std::size_t bins() const { return length_ / 2 + 1; }
  /// Writes the bins() one-sided magnitudes of x (length() samples) to out.
  void magnitudes(const double* x, double* out);

 private:
  struct Impl;
  std::size_t length_;
  std::unique_ptr<Impl> impl_;
};

struct SpectrumOptions {
  double window_lo_ns = -std::numeric_limits<double>::infinity();
  double window_hi_ns = std::numeric_limits<double>::infinity();
  Detrend detrend = Detrend::kMean;
};

/// detrend_and_window followed by spectrum.
Spectrum analyze_series(const TauSeries& series, const SpectrumOptions& options);

struct PeakReport {
  std::size_t bin = 0;
  double omega_ghz = 0.0;
  double amplitude = 0.0;
  double baseline = 0.0;
  double sigma = 0.0;
  double significance = 0.0;
};

/// Flat noise baseline = mean amplitude over the bins with Omega in
/// [band_lo, band_hi] (at least 5). Reports the bin in (search_lo, search_hi]
/// with the largest (S - baseline) / sigma; DC is never searched. The usual
/// display band is baseline +/- 2 sigma.
PeakReport detect_peak(const Spectrum& spec, double band_lo_ghz, double band_hi_ghz,
                       double search_lo_ghz = 0.0,
                       double search_hi_ghz = std::numeric_limits<double>::infinity());

/// Bin with the largest amplitude for Omega in [omega_lo, omega_hi].
std::size_t dominant_bin(const Spectrum& spec, double omega_lo_ghz,
                         double omega_hi_ghz = std::numeric_limits<double>::infinity());

/// Amplitude at the grid point nearest `omega_ghz` in a window of +/- `bins`.
double local_max_amplitude(const Spectrum& spec, double omega_ghz, int bins);

/// Largest interior local maximum (S[i-1] < S[i] >= S[i+1]) with omega in
/// [omega_lo, omega_hi]; nullopt when the band holds none.
std::optional<std::size_t> dominant_peak_bin(
    const Spectrum& spec, double omega_lo_ghz,
    double omega_hi_ghz = std::numeric_limits<double>::infinity());

}  // namespace mbco

#endif  // MBCO_SPECTRAL_HPP
