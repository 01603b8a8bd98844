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

#ifndef MBCO_RK_INTEGRATOR_HPP
#define MBCO_RK_INTEGRATOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Core>

#include "mbco/errors.hpp"

namespace mbco {

struct RkOptions {
  double rtol = 1e-9;
  double atol = 1e-9;
  long max_steps = 20'000'000;
};

struct RkStats {
  long accepted = 0;
  long rejected = 0;
};

namespace detail {

// Dormand-Prince 8(5,3) coefficients (Hairer, Norsett and Wanner).
inline constexpr double kDop853C[12] = {0.0, 0.05260015195876773, 0.0789002279381516, 0.1183503419072274, 0.2816496580927726, 0.3333333333333333, 0.25, 0.3076923076923077, 0.6512820512820513, 0.6, 0.8571428571428571, 1.0};
inline constexpr double kDop853A[12][12] = {
    {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.05260015195876773, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.0197250569845379, 0.0591751709536137, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.02958758547680685, 0.0, 0.08876275643042054, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.2413651341592667, 0.0, -0.8845494793282861, 0.924834003261792, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.037037037037037035, 0.0, 0.0, 0.17082860872947386, 0.12546768756682242, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.037109375, 0.0, 0.0, 0.17025221101954405, 0.06021653898045596, -0.017578125, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.03709200011850479, 0.0, 0.0, 0.17038392571223998, 0.10726203044637328, -0.015319437748624402, 0.008273789163814023, 0.0, 0.0, 0.0, 0.0, 0.0},
    {0.6241109587160757, 0.0, 0.0, -3.3608926294469414, -0.868219346841726, 27.59209969944671, 20.154067550477894, -43.48988418106996, 0.0, 0.0, 0.0, 0.0},
    {0.47766253643826434, 0.0, 0.0, -2.4881146199716677, -0.590290826836843, 21.230051448181193, 15.279233632882423, -33.28821096898486, -0.020331201708508627, 0.0, 0.0, 0.0},
    {-0.9371424300859873, 0.0, 0.0, 5.186372428844064, 1.0914373489967295, -8.149787010746927, -18.52006565999696, 22.739487099350505, 2.4936055526796523, -3.0467644718982196, 0.0, 0.0},
    {2.273310147516538, 0.0, 0.0, -10.53449546673725, -2.0008720582248625, -17.9589318631188, 27.94888452941996, -2.8589982771350235, -8.87285693353063, 12.360567175794303, 0.6433927460157636, 0.0},
};
inline constexpr double kDop853B[12] = {0.054293734116568765, 0.0, 0.0, 0.0, 0.0, 4.450312892752409, 1.8915178993145003, -5.801203960010585, 0.3111643669578199, -0.1521609496625161, 0.20136540080403034, 0.04471061572777259};
inline constexpr double kDop853E3[13] = {-0.18980075407240762, 0.0, 0.0, 0.0, 0.0, 4.450312892752409, 1.8915178993145003, -5.801203960010585, -0.4226823213237919, -0.1521609496625161, 0.20136540080403034, 0.02265179219836082, 0.0};
inline constexpr double kDop853E5[13] = {0.01312004499419488, 0.0, 0.0, 0.0, 0.0, -1.2251564463762044, -0.4957589496572502, 1.6643771824549864, -0.35032884874997366, 0.3341791187130175, 0.08192320648511571, -0.022355307863886294, 0.0};

}  // namespace detail

/// Dormand-Prince 5(4) with the standard PI-free step controller. `State` is
/// any Eigen vector type; `rhs(t, y, dydt)` fills the derivative. Integrates y
/// in place from t0 to t1 > t0.
template <class State, class Rhs>
RkStats integrate_dopri5(Rhs&& rhs, State& y, double t0, double t1, const RkOptions& opt) {
  // Butcher tableau.
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  RkStats stats;
  if (!(t1 > t0)) return stats;

  const auto n = y.size();
  State k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n), err(n);

  auto error_norm = [&](const State& e, const State& y0, const State& y1) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double scale = opt.atol + opt.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      const double r = std::abs(e[i]) / scale;
      acc += r * r;
    }
    return std::sqrt(acc / static_cast<double>(n));
  };

  double t = t0;
  rhs(t, y, k1);

  // Initial step from the derivative scale.
  double h;
  {
    double d0 = 0.0, d1 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double scale = opt.atol + opt.rtol * std::abs(y[i]);
      d0 += std::pow(std::abs(y[i]) / scale, 2);
      d1 += std::pow(std::abs(k1[i]) / scale, 2);
    }
    d0 = std::sqrt(d0 / n);
    d1 = std::sqrt(d1 / n);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, t1 - t0);
  }

  constexpr double kSafety = 0.9, kMinFactor = 0.2, kMaxFactor = 5.0;
  bool last_rejected = false;
  while (t < t1) {
    if (stats.accepted + stats.rejected >= opt.max_steps) {
      throw NumericalError("Runge-Kutta step budget exhausted at t=" + std::to_string(t));
    }
    if (t + h > t1) h = t1 - t;
    if (h <= std::abs(t) * 1e-15) throw NumericalError("Runge-Kutta step size underflow");

    tmp = y + h * (a21 * k1);
    rhs(t + c2 * h, tmp, k2);
    tmp = y + h * (a31 * k1 + a32 * k2);
    rhs(t + c3 * h, tmp, k3);
    tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    rhs(t + c4 * h, tmp, k4);
    tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    rhs(t + c5 * h, tmp, k5);
    tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    const double t_next = (t + h >= t1) ? t1 : t + h;
    rhs(t_next, tmp, k6);
    ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    rhs(t_next, ynew, k7);
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double en = error_norm(err, y, ynew);
    if (en <= 1.0) {
      t = t_next;
      y = ynew;
      k1 = k7;  // first-same-as-last
      ++stats.accepted;
      double factor = en == 0.0 ? kMaxFactor : kSafety * std::pow(en, -0.2);
      factor = std::clamp(factor, kMinFactor, last_rejected ? 1.0 : kMaxFactor);
      h *= factor;
      last_rejected = false;
    } else {
      ++stats.rejected;
      h *= std::max(kMinFactor, kSafety * std::pow(en, -0.2));
      last_rejected = true;
    }
  }
  return stats;
}

/// Dormand-Prince 8(5,3): eighth-order step with the combined fifth/third
/// order error estimate. Same interface as integrate_dopri5.
template <class State, class Rhs>
RkStats integrate_dop853(Rhs&& rhs, State& y, double t0, double t1, const RkOptions& opt) {
  using detail::kDop853A;
  using detail::kDop853B;
  using detail::kDop853C;
  using detail::kDop853E3;
  using detail::kDop853E5;

  RkStats stats;
  if (!(t1 > t0)) return stats;

  const auto n = y.size();
  State k[13];
  for (State& ki : k) ki.resize(n);
  State tmp(n), ynew(n), e3(n), e5(n);

  double t = t0;
  rhs(t, y, k[0]);

  double h;
  {
    double d0 = 0.0, d1 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double scale = opt.atol + opt.rtol * std::abs(y[i]);
      d0 += std::norm(y[i]) / (scale * scale);
      d1 += std::norm(k[0][i]) / (scale * scale);
    }
    d0 = std::sqrt(d0 / n);
    d1 = std::sqrt(d1 / n);
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, t1 - t0);
  }

  constexpr double kSafety = 0.9, kMinFactor = 0.2, kMaxFactor = 10.0;
  bool last_rejected = false;
  while (t < t1) {
    if (stats.accepted + stats.rejected >= opt.max_steps) {
      throw NumericalError("Runge-Kutta step budget exhausted at t=" + std::to_string(t));
    }
    if (t + h > t1) h = t1 - t;
    if (h <= std::abs(t) * 1e-15) throw NumericalError("Runge-Kutta step size underflow");

    for (int s = 1; s < 12; ++s) {
      tmp = kDop853A[s][0] * k[0];
      for (int j = 1; j < s; ++j) {
        if (kDop853A[s][j] != 0.0) tmp += kDop853A[s][j] * k[j];
      }
      tmp = y + h * tmp;
      rhs(t + kDop853C[s] * h, tmp, k[s]);
    }
    tmp = kDop853B[0] * k[0];
    for (int j = 5; j < 12; ++j) tmp += kDop853B[j] * k[j];
    ynew = y + h * tmp;
    const double t_next = (t + h >= t1) ? t1 : t + h;
    rhs(t_next, ynew, k[12]);

    e5 = kDop853E5[0] * k[0];
    e3 = kDop853E3[0] * k[0];
    for (int j = 5; j < 13; ++j) {
      e5 += kDop853E5[j] * k[j];
      e3 += kDop853E3[j] * k[j];
    }
    double n5 = 0.0, n3 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double scale = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      n5 += std::norm(e5[i]) / (scale * scale);
      n3 += std::norm(e3[i]) / (scale * scale);
    }
    double en = 0.0;
    if (n5 > 0.0 || n3 > 0.0) en = h * n5 / std::sqrt((n5 + 0.01 * n3) * static_cast<double>(n));

    if (en <= 1.0) {
      t = t_next;
      y = ynew;
      k[0] = k[12];
      ++stats.accepted;
      double factor = en == 0.0 ? kMaxFactor : kSafety * std::pow(en, -0.125);
      factor = std::clamp(factor, kMinFactor, last_rejected ? 1.0 : kMaxFactor);
      h *= factor;
      last_rejected = false;
    } else {
      ++stats.rejected;
      h *= std::max(kMinFactor, kSafety * std::pow(en, -0.125));
      last_rejected = true;
    }
  }
  return stats;
}

}  // namespace mbco

#endif  // MBCO_RK_INTEGRATOR_HPP
