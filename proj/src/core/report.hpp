// Copyright 2026 The Divan Authors
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

#ifndef DIVAN_CORE_REPORT_HPP_
#define DIVAN_CORE_REPORT_HPP_

// File and CSV plumbing shared by the loaders and report writers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace divan {

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename, creating parent
/// directories as needed.
void write_text_file(const std::filesystem::path& path, std::string_view content);

/// Splits on '\n', dropping a trailing '\r' from each line.
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view s);

/// RFC 4180 field splitting for a single line (quoted fields may contain
/// commas and doubled quotes, not newlines).
std::vector<std::string> split_csv_line(std::string_view line);

std::string csv_field(std::string_view value);

/// Fixed six-decimal rendering used by every numeric report column.
std::string format_real(double value);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header, char delimiter = ',');

  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return out_; }

 private:
  void emit(const std::vector<std::string>& fields);

  std::size_t columns_;
  char delimiter_;
  std::string out_;
};

}  // namespace divan

#endif  // DIVAN_CORE_REPORT_HPP_
