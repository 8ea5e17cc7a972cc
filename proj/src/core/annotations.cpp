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

#include "core/annotations.hpp"

#include <charconv>
#include <map>
#include <tuple>
#include <vector>

#include "core/error.hpp"
#include "core/report.hpp"

namespace divan {

RatingMatrix parse_annotations_csv(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t line_no = 0;
  bool header_seen = false;
  std::vector<std::string> items, raters;
  std::map<std::string, std::size_t, std::less<>> item_index, rater_index;
  std::vector<std::tuple<std::size_t, std::size_t, int, std::size_t>> cells;

  for (std::string_view raw : lines) {
    ++line_no;
    if (trim(raw).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(raw);
    } catch (const Error& e) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": " + e.what());
    }
    for (auto& f : fields) f = std::string(trim(f));
    if (!header_seen) {
      if (fields != std::vector<std::string>{"poem_id", "rater_id", "score"}) {
        fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": expected header poem_id,rater_id,score");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": expected 3 fields");
    }
    int score = 0;
    const std::string& s = fields[2];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), score);
    if (ec != std::errc() || ptr != s.data() + s.size() || !SentimentScore::valid(score)) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": score must be an integer 1..5, got '" + s + "'");
    }
    if (fields[0].empty() || fields[1].empty()) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": empty poem_id or rater_id");
    }
    auto [it, inserted_item] = item_index.try_emplace(fields[0], items.size());
    if (inserted_item) items.push_back(fields[0]);
    auto [rt, inserted_rater] = rater_index.try_emplace(fields[1], raters.size());
    if (inserted_rater) raters.push_back(fields[1]);
    cells.emplace_back(it->second, rt->second, score, line_no);
  }
  if (!header_seen) fail(ErrorCode::kMalformedRecord, "annotation file is empty");
  if (items.empty()) fail(ErrorCode::kInsufficientData, "annotation file has no ratings");

  RatingMatrix matrix(std::move(items), std::move(raters));
  for (const auto& [i, r, score, line] : cells) {
    if (matrix.at(i, r)) {
      fail(ErrorCode::kDuplicateId, "line " + std::to_string(line) + ": rater '" + matrix.rater_ids()[r] +
                                        "' rated poem '" + matrix.item_ids()[i] + "' twice");
    }
    matrix.set(i, r, SentimentScore(score));
  }
  return matrix;
}

RatingMatrix load_annotations_csv(const std::filesystem::path& path) {
  try {
    return parse_annotations_csv(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string annotations_to_csv(const RatingMatrix& m) {
  CsvWriter csv({"poem_id", "rater_id", "score"});
  for (std::size_t i = 0; i < m.items(); ++i) {
    for (std::size_t r = 0; r < m.raters(); ++r) {
      if (const auto& c = m.at(i, r)) csv.row({m.item_ids()[i], m.rater_ids()[r], std::to_string(c->value())});
    }
  }
  return csv.str();
}

}  // namespace divan
