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

#ifndef DIVAN_CORE_SCORE_CACHE_HPP_
#define DIVAN_CORE_SCORE_CACHE_HPP_

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "core/score.hpp"

namespace divan {

/// Provenance of one scoring event. final_score always equals
/// combine_chunk_scores(chunk_scores).
struct ScoreRecord {
  std::string poem_id;
  std::string scorer_id;
  int run_index = 0;
  ScoreList chunk_scores;
  SentimentScore final_score{SentimentScore::kMin};
  std::vector<std::string> raw_responses;
  std::string timestamp;
  std::optional<double> temperature;

  friend bool operator==(const ScoreRecord&, const ScoreRecord&) = default;
};

/// One JSON object, no trailing newline. Key order is fixed.
std::string score_record_to_json(const ScoreRecord& record);

/// Throws kMalformedRecord, including when final_score disagrees with the
/// chunk scores.
ScoreRecord score_record_from_json(std::string_view line);

std::vector<ScoreRecord> read_score_records(const std::filesystem::path& path);

/// Append-only JSON Lines store keyed by (scorer_id, poem_id, run_index).
/// An empty path keeps records in memory only. append() is the single
/// mutation point and is serialized internally.
class ScoreCache {
 public:
  ScoreCache() = default;
  explicit ScoreCache(std::filesystem::path path);

  ScoreCache(const ScoreCache&) = delete;
  ScoreCache& operator=(const ScoreCache&) = delete;

  std::optional<ScoreRecord> find(std::string_view scorer_id, std::string_view poem_id, int run_index) const;

  /// Later records for an existing key replace earlier ones in lookups.
  void append(const ScoreRecord& record);

  std::vector<ScoreRecord> records() const;
  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  using Key = std::tuple<std::string, std::string, int>;

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::vector<ScoreRecord> records_;
  std::map<Key, std::size_t, std::less<>> index_;
};

}  // namespace divan

#endif  // DIVAN_CORE_SCORE_CACHE_HPP_
