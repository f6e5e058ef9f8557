// Copyright 2026 The Magmech Authors
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

#include "magmech/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "magmech/error.hpp"

namespace magmech {

std::string sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", value);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& values) {
  if (values.size() != header_.size()) {
    throw ModuleError("report: row width does not match the header");
  }
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(sci(v));
  rows_.push_back(std::move(cells));
}

void CsvTable::add_text_row(const std::vector<std::string>& cells) {
  if (cells.size() != header_.size()) {
    throw ModuleError("report: row width does not match the header");
  }
  for (const auto& c : cells) {
    if (c.find(',') != std::string::npos ||
        c.find('\n') != std::string::npos) {
      throw ModuleError("report: cell text must not contain ',' or newlines");
    }
  }
  rows_.push_back(cells);
}

std::string CsvTable::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (i) os << ',';
    os << header_[i];
  }
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ModuleError("report: cannot write '" + path + "'");
  }
  out << to_string();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace magmech
