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

#ifndef MBCO_CSV_IO_HPP
#define MBCO_CSV_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace mbco {

/// Numeric CSV with a single header line.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of `name` in the header; throws ConfigError when absent.
  size_t column(const std::string& name) const;
  std::vector<double> column_values(const std::string& name) const;
};

CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

/// Writes with round-trip precision so reruns are byte-identical.
void write_csv(std::ostream& out, const CsvTable& table);
void write_csv_file(const std::filesystem::path& path, const CsvTable& table);

}  // namespace mbco

#endif  // MBCO_CSV_IO_HPP
