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


#ifndef MBCO_TOOLS_SVG_HPP
#define MBCO_TOOLS_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace mbco::cli {

/// Minimal line/band/bar chart written as standalone SVG. Output depends only
/// on the data, so identical inputs give identical files.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_line(const std::vector<double>& x, const std::vector<double>& y, std::string label,
                std::string color = {});
  /// Shaded region between lo and hi.
  void add_band(const std::vector<double>& x, const std::vector<double>& lo,
                const std::vector<double>& hi, std::string color = {});
  /// Histogram bars: edges has one more entry than counts.
  void add_bars(const std::vector<double>& edges, const std::vector<double>& counts,
                std::string label, std::string color = {});
  void set_x_range(double lo, double hi);
  void set_y_range(double lo, double hi);

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    enum class Kind { kLine, kBand, kBars } kind;
    std::vector<double> x, y, y2;
    std::string label, color;
  };
  std::string next_color();

  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  bool fixed_x_ = false, fixed_y_ = false;
  double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1;
  int color_index_ = 0;
};

}  // namespace mbco::cli

#endif  // MBCO_TOOLS_SVG_HPP
