// Copyright 2026 The mdiasym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// CSV serialization of scan grids. Files carry optional '#' comment lines,
// one column-name row, then comma-separated data rows. Numbers use 17
// significant digits so a parsed file reproduces the grid bit-exactly.

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "mdiasym/errors.hpp"
#include "mdiasym/scan.hpp"

namespace mdiasym {

/// Shortest-safe text for a double: %.17g semantics, locale independent.
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return {buf.data(), res.ptr};
}

inline double parse_number(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ConfigError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

inline std::vector<std::string> csv_columns(const ScanResult& result) {
  std::vector<std::string> cols{std::string(to_string(result.spec.axis1.param)),
                                std::string(to_string(result.spec.axis2.param)), "value"};
  if (result.deviations) {
    cols.emplace_back("deviation");
  }
  return cols;
}

/// Writes `comments` (each prefixed with "# "), the column row, then one row
/// per grid node in row-major order.
inline void write_scan_csv(std::ostream& os, const ScanResult& result, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) {
    os << "# " << c << '\n';
  }
  const auto cols = csv_columns(result);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << cols[i];
  }
  os << '\n';
  for (std::size_t r = 0; r < result.rows(); ++r) {
    const std::string x1 = format_number(result.spec.axis1.node(r));
    for (std::size_t c = 0; c < result.cols(); ++c) {
      const std::size_t idx = r * result.cols() + c;
      os << x1 << ',' << format_number(result.spec.axis2.node(c)) << ',' << format_number(result.values[idx]);
      if (result.deviations) {
        os << ',' << format_number((*result.deviations)[idx]);
      }
      os << '\n';
    }
  }
}

struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Values of one named column.
  [[nodiscard]] std::vector<double> column(std::string_view name) const {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j] == name) {
        std::vector<double> out;
        out.reserve(rows.size());
        for (const auto& row : rows) {
          out.push_back(row[j]);
        }
        return out;
      }
    }
    throw ConfigError("no column named '" + std::string(name) + "'");
  }
};

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return out;
}

} // namespace detail

inline CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (line.front() == '#') {
      std::string_view c(line);
      c.remove_prefix(1);
      if (!c.empty() && c.front() == ' ') {
        c.remove_prefix(1);
      }
      table.comments.emplace_back(c);
      continue;
    }
    const auto fields = detail::split_commas(line);
    if (!have_header) {
      for (auto f : fields) {
        table.columns.emplace_back(f);
      }
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw ConfigError("csv row has " + std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(table.columns.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) {
      row.push_back(parse_number(f));
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) {
    throw ConfigError("csv input has no column row");
  }
  return table;
}

} // namespace mdiasym
