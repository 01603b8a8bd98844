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

#ifndef MBCO_SCHEDULE_HPP
#define MBCO_SCHEDULE_HPP

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "mbco/chain.hpp"

namespace mbco {

/// Instantaneous envelopes of the anneal, both ordinary frequencies in GHz.
struct SchedulePoint {
  double coupling_ghz = 0.0;  // scales the Ising term
  double field_ghz = 0.0;     // transverse field
};

struct ScheduleRow {
  double s = 0.0;
  double coupling_ghz = 0.0;
  double field_ghz = 0.0;
};

/// Annealing schedule on s in [0, 1]. The coupling envelope starts at zero and
/// never decreases; the field envelope ends at zero and never increases.
class AnnealSchedule {
 public:
  enum class Kind { kLinear, kTabulated };

  /// coupling(s) = coupling_final * s, field(s) = gamma0 * (1 - s).
  static AnnealSchedule linear(double gamma0_ghz, double coupling_final_ghz);

  /// Piecewise-linear interpolation of `rows`. Rows must be strictly increasing
  /// in s, start at s = 0 and end at s = 1.
  static AnnealSchedule tabulated(std::vector<ScheduleRow> rows);

  Kind kind() const { return kind_; }
  double gamma0() const { return gamma0_; }
  double coupling_final() const { return coupling_final_; }
  const std::vector<ScheduleRow>& table() const { return table_; }

  SchedulePoint eval(double s) const;

  /// Same shape with both envelopes multiplied by `factor` > 0.
  AnnealSchedule scaled(double factor) const;

 private:
  AnnealSchedule() = default;

  Kind kind_ = Kind::kLinear;
  double gamma0_ = 0.0;
  double coupling_final_ = 0.0;
  std::vector<ScheduleRow> table_;
};

/// Reads the `s,J_GHz,Gamma_GHz` CSV format.
AnnealSchedule load_schedule_csv(const std::filesystem::path& path);
AnnealSchedule read_schedule_csv(std::istream& in);
void write_schedule_csv(std::ostream& out, const AnnealSchedule& schedule, int samples = 101);

/// Anneal fraction where sqrt(J^2 + delta^2) * coupling(s) == field(s).
double critical_s(const AnnealSchedule& schedule, const ChainSpec& chain);

}  // namespace mbco

#endif  // MBCO_SCHEDULE_HPP
