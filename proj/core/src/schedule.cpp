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

#include "mbco/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include "mbco/csv_io.hpp"
#include "mbco/errors.hpp"

namespace mbco {

AnnealSchedule AnnealSchedule::linear(double gamma0_ghz, double coupling_final_ghz) {
  if (!(gamma0_ghz > 0.0) || !(coupling_final_ghz > 0.0) || !std::isfinite(gamma0_ghz) ||
      !std::isfinite(coupling_final_ghz)) {
    throw ConfigError("linear schedule needs positive finite gamma0 and final coupling");
  }
  AnnealSchedule schedule;
  schedule.kind_ = Kind::kLinear;
  schedule.gamma0_ = gamma0_ghz;
  schedule.coupling_final_ = coupling_final_ghz;
  return schedule;
}

AnnealSchedule AnnealSchedule::tabulated(std::vector<ScheduleRow> rows) {
  if (rows.size() < 2) throw ConfigError("schedule table needs at least two rows");
  if (rows.front().s != 0.0 || rows.back().s != 1.0) {
    throw ConfigError("schedule table must start at s=0 and end at s=1");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    const ScheduleRow& r = rows[i];
    if (!std::isfinite(r.coupling_ghz) || !std::isfinite(r.field_ghz) || r.coupling_ghz < 0.0 ||
        r.field_ghz < 0.0) {
      throw ConfigError("schedule envelopes must be finite and non-negative");
    }
    if (i > 0) {
      const ScheduleRow& p = rows[i - 1];
      if (!(r.s > p.s)) throw ConfigError("schedule rows must be strictly increasing in s");
      if (r.coupling_ghz < p.coupling_ghz) throw ConfigError("coupling envelope must be non-decreasing");
      if (r.field_ghz > p.field_ghz) throw ConfigError("field envelope must be non-increasing");
    }
  }
  if (rows.front().coupling_ghz != 0.0) throw ConfigError("coupling envelope must vanish at s=0");
  if (rows.back().field_ghz != 0.0) throw ConfigError("field envelope must vanish at s=1");

  AnnealSchedule schedule;
  schedule.kind_ = Kind::kTabulated;
  schedule.gamma0_ = rows.front().field_ghz;
  schedule.coupling_final_ = rows.back().coupling_ghz;
  schedule.table_ = std::move(rows);
  return schedule;
}

SchedulePoint AnnealSchedule::eval(double s) const {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw ConfigError("anneal fraction s must lie in [0, 1]");
  }
  if (kind_ == Kind::kLinear) {
    return {coupling_final_ * s, gamma0_ * (1.0 - s)};
  }
  auto hi = std::upper_bound(table_.begin(), table_.end(), s,
                             [](double v, const ScheduleRow& r) { return v < r.s; });
  if (hi == table_.end()) return {table_.back().coupling_ghz, table_.back().field_ghz};
  auto lo = hi - 1;
  const double w = (s - lo->s) / (hi->s - lo->s);
  return {lo->coupling_ghz + w * (hi->coupling_ghz - lo->coupling_ghz),
          lo->field_ghz + w * (hi->field_ghz - lo->field_ghz)};
}

AnnealSchedule AnnealSchedule::scaled(double factor) const {
  if (!(factor > 0.0)) throw ConfigError("schedule scale factor must be positive");
  if (kind_ == Kind::kLinear) return linear(gamma0_ * factor, coupling_final_ * factor);
  std::vector<ScheduleRow> rows = table_;
  for (ScheduleRow& r : rows) {
    r.coupling_ghz *= factor;
    r.field_ghz *= factor;
  }
  return tabulated(std::move(rows));
}

AnnealSchedule read_schedule_csv(std::istream& in) {
  CsvTable table = read_csv(in);
  const size_t cs = table.column("s");
  const size_t cj = table.column("J_GHz");
  const size_t cg = table.column("Gamma_GHz");
  std::vector<ScheduleRow> rows;
  rows.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    rows.push_back({row[cs], row[cj], row[cg]});
  }
  return AnnealSchedule::tabulated(std::move(rows));
}

AnnealSchedule load_schedule_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open schedule file " + path.string());
  return read_schedule_csv(in);
}

void write_schedule_csv(std::ostream& out, const AnnealSchedule& schedule, int samples) {
  out << "s,J_GHz,Gamma_GHz\n" << std::setprecision(17);
  if (schedule.kind() == AnnealSchedule::Kind::kTabulated) {
    for (const ScheduleRow& r : schedule.table()) {
      out << r.s << ',' << r.coupling_ghz << ',' << r.field_ghz << '\n';
    }
    return;
  }
  for (int i = 0; i < samples; ++i) {
    const double s = i == samples - 1 ? 1.0 : static_cast<double>(i) / (samples - 1);
    const SchedulePoint p = schedule.eval(s);
    out << s << ',' << p.coupling_ghz << ',' << p.field_ghz << '\n';
  }
}

double critical_s(const AnnealSchedule& schedule, const ChainSpec& chain) {
  const double scale = std::hypot(chain.j, chain.delta);
  auto residual = [&](double s) {
    const SchedulePoint p = schedule.eval(s);
    return scale * p.coupling_ghz - p.field_ghz;
  };
  double lo = 0.0;
  double hi = 1.0;
  double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw ConfigError("schedule never crosses the critical line on [0, 1]");
  }
  // Residual is monotone, so plain bisection; 60 halvings reach ~1e-18.
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = residual(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mbco
