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

#ifndef MAGMECH_REPORT_HPP_
#define MAGMECH_REPORT_HPP_

#include <string>
#include <vector>

namespace magmech {

// Fixed scientific formatting with 9 significant digits and '.' decimal;
// identical configs must reproduce byte-identical files.
std::string sci(double value);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  void add_text_row(const std::vector<std::string>& cells);

  std::string to_string() const;
  void write(const std::string& path) const;

  std::size_t row_count() const { return rows_.size(); }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Parses a CSV produced by CsvTable back into cells (round-trip checks).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

}  // namespace magmech

#endif  // MAGMECH_REPORT_HPP_
