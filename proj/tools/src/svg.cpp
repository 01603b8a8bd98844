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


#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "mbco/errors.hpp"

namespace mbco::cli {
namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 170, kTop = 40, kBottom = 60;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", std::abs(v) < 1e-14 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

// Roughly five round-number ticks covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) ticks.push_back(t);
  return ticks;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

std::string SvgPlot::next_color() { return kPalette[color_index_++ % 8]; }

void SvgPlot::add_line(const std::vector<double>& x, const std::vector<double>& y,
                       std::string label, std::string color) {
  if (x.size() != y.size()) throw ConfigError("plot series x/y length mismatch");
  series_.push_back({Series::Kind::kLine, x, y, {}, std::move(label),
                     color.empty() ? next_color() : std::move(color)});
}

void SvgPlot::add_band(const std::vector<double>& x, const std::vector<double>& lo,
                       const std::vector<double>& hi, std::string color) {
  if (x.size() != lo.size() || x.size() != hi.size()) throw ConfigError("plot band length mismatch");
  series_.push_back({Series::Kind::kBand, x, lo, hi, {}, color.empty() ? "#999999" : std::move(color)});
}

void SvgPlot::add_bars(const std::vector<double>& edges, const std::vector<double>& counts,
                       std::string label, std::string color) {
  if (edges.size() != counts.size() + 1) throw ConfigError("histogram needs one more edge than bins");
  series_.push_back({Series::Kind::kBars, edges, counts, {}, std::move(label),
                     color.empty() ? next_color() : std::move(color)});
}

void SvgPlot::set_x_range(double lo, double hi) {
  fixed_x_ = true;
  x_lo_ = lo;
  x_hi_ = hi;
}

void SvgPlot::set_y_range(double lo, double hi) {
  fixed_y_ = true;
  y_lo_ = lo;
  y_hi_ = hi;
}

std::string SvgPlot::render() const {
  double xl = x_lo_, xh = x_hi_, yl = y_lo_, yh = y_hi_;
  if (!fixed_x_ || !fixed_y_) {
    double ax = std::numeric_limits<double>::infinity(), bx = -ax, ay = ax, by = -ax;
    for (const Series& s : series_) {
      for (double v : s.x) {
        if (std::isfinite(v)) ax = std::min(ax, v), bx = std::max(bx, v);
      }
      for (const auto* ys : {&s.y, &s.y2}) {
        for (double v : *ys) {
          if (std::isfinite(v)) ay = std::min(ay, v), by = std::max(by, v);
        }
      }
      if (s.kind == Series::Kind::kBars) ay = std::min(ay, 0.0);
    }
    if (!std::isfinite(ax)) ax = 0, bx = 1;
    if (!std::isfinite(ay)) ay = 0, by = 1;
    if (bx == ax) bx = ax + 1;
    if (by == ay) by = ay + 1;
    const double pad = 0.05 * (by - ay);
    if (!fixed_x_) xl = ax, xh = bx;
    if (!fixed_y_) yl = ay - pad, yh = by + pad;
  }
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xl) / (xh - xl) * pw; };
  auto py = [&](double y) { return kTop + (yh - y) / (yh - yl) * ph; };
  auto clampy = [&](double y) { return std::clamp(y, yl, yh); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
    << escape(title_) << "</text>\n";
  o << "<defs><clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
    << "\" height=\"" << ph << "\"/></clipPath></defs>\n";

  for (double t : nice_ticks(xl, xh)) {
    o << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(px(t))
      << "\" y2=\"" << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>";
    o << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(kTop + ph + 18)
      << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : nice_ticks(yl, yh)) {
    o << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(t)) << "\" x2=\"" << kLeft
      << "\" y2=\"" << fmt(py(t)) << "\" stroke=\"black\"/>";
    o << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(t) + 4) << "\" text-anchor=\"end\">"
      << tick_label(t) << "</text>\n";
  }
  o << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 15)
    << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n";
  o << "<text transform=\"translate(18," << fmt(kTop + ph / 2)
    << ") rotate(-90)\" text-anchor=\"middle\">" << escape(y_label_) << "</text>\n";

  o << "<g clip-path=\"url(#plot)\">\n";
  for (const Series& s : series_) {
    if (s.kind == Series::Kind::kBand) {
      o << "<polygon fill=\"" << s.color << "\" fill-opacity=\"0.3\" stroke=\"none\" points=\"";
      for (size_t i = 0; i < s.x.size(); ++i) o << fmt(px(s.x[i])) << ',' << fmt(py(clampy(s.y2[i]))) << ' ';
      for (size_t i = s.x.size(); i-- > 0;) o << fmt(px(s.x[i])) << ',' << fmt(py(clampy(s.y[i]))) << ' ';
      o << "\"/>\n";
    } else if (s.kind == Series::Kind::kBars) {
      for (size_t i = 0; i < s.y.size(); ++i) {
        const double top = py(clampy(std::max(s.y[i], 0.0))), base = py(clampy(0.0));
        o << "<rect x=\"" << fmt(px(s.x[i])) << "\" y=\"" << fmt(top) << "\" width=\""
          << fmt(std::max(0.0, px(s.x[i + 1]) - px(s.x[i]))) << "\" height=\""
          << fmt(std::max(0.0, base - top)) << "\" fill=\"" << s.color
          << "\" fill-opacity=\"0.5\" stroke=\"" << s.color << "\"/>\n";
      }
    } else {
      o << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (size_t i = 0; i < s.x.size(); ++i) {
        if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
          o << fmt(px(s.x[i])) << ',' << fmt(py(clampy(s.y[i]))) << ' ';
        }
      }
      o << "\"/>\n";
    }
  }
  o << "</g>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
    << "\" fill=\"none\" stroke=\"black\"/>\n";

  double ly = kTop + 10;
  for (const Series& s : series_) {
    if (s.label.empty()) continue;
    o << "<rect x=\"" << fmt(kLeft + pw + 12) << "\" y=\"" << fmt(ly - 8) << "\" width=\"14\" height=\"4\" fill=\""
      << s.color << "\"/><text x=\"" << fmt(kLeft + pw + 32) << "\" y=\"" << fmt(ly - 2) << "\">"
      << escape(s.label) << "</text>\n";
    ly += 18;
  }
  o << "</svg>\n";
  return o.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << render();
}

}  // namespace mbco::cli
