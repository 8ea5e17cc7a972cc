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

#include "core/score_cache.hpp"

#include <json.hpp>

#include <fstream>

#include "core/error.hpp"
#include "core/report.hpp"
#include "core/textprep.hpp"

namespace divan {

using json = nlohmann::ordered_json;

std::string score_record_to_json(const ScoreRecord& r) {
  json obj;
  obj["poem_id"] = r.poem_id;
  obj["scorer_id"] = r.scorer_id;
  obj["run_index"] = r.run_index;
  json chunks = json::array();
  for (auto s : r.chunk_scores) chunks.push_back(s.value());
  obj["chunk_scores"] = std::move(chunks);
  obj["final_score"] = r.final_score.value();
  obj["raw_responses"] = r.raw_responses;
  obj["timestamp"] = r.timestamp;
  if (r.temperature) obj["temperature"] = *r.temperature;
  return obj.dump();
}

namespace {

int score_value(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(ErrorCode::kMalformedRecord, std::string(what) + " must be an integer");
  const int value = v.get<int>();
  if (!SentimentScore::valid(value)) {
    fail(ErrorCode::kMalformedRecord, std::string(what) + " out of range 1..5: " + std::to_string(value));
  }
  return value;
}

}  // namespace

ScoreRecord score_record_from_json(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kMalformedRecord, std::string("invalid JSON: ") + e.what());
  }
  try {
    ScoreRecord r;
    r.poem_id = obj.at("poem_id").get<std::string>();
    r.scorer_id = obj.at("scorer_id").get<std::string>();
    r.run_index = obj.at("run_index").get<int>();
    if (r.run_index < 0) fail(ErrorCode::kMalformedRecord, "negative run_index");
    for (const auto& s : obj.at("chunk_scores")) r.chunk_scores.emplace_back(score_value(s, "chunk score"));
    if (r.chunk_scores.empty()) fail(ErrorCode::kMalformedRecord, "record has no chunk scores");
    r.final_score = SentimentScore(score_value(obj.at("final_score"), "final_score"));
    r.raw_responses = obj.at("raw_responses").get<std::vector<std::string>>();
    if (auto it = obj.find("timestamp"); it != obj.end()) r.timestamp = it->get<std::string>();
    if (auto it = obj.find("temperature"); it != obj.end() && !it->is_null()) r.temperature = it->get<double>();
    if (combine_chunk_scores(r.chunk_scores) != r.final_score) {
      fail(ErrorCode::kMalformedRecord, "final_score does not match chunk scores for poem '" + r.poem_id + "'");
    }
    return r;
  } catch (const json::exception& e) {
    fail(ErrorCode::kMalformedRecord, std::string("bad score record: ") + e.what());
  }
}

std::vector<ScoreRecord> read_score_records(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::vector<ScoreRecord> records;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      records.push_back(score_record_from_json(line));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return records;
}

ScoreCache::ScoreCache(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  for (ScoreRecord& r : read_score_records(path_)) {
    Key key{r.scorer_id, r.poem_id, r.run_index};
    index_[std::move(key)] = records_.size();
    records_.push_back(std::move(r));
  }
}

std::optional<ScoreRecord> ScoreCache::find(std::string_view scorer_id, std::string_view poem_id,
                                            int run_index) const {
  std::lock_guard lock(mu_);
  auto it = index_.find(Key{std::string(scorer_id), std::string(poem_id), run_index});
  if (it == index_.end()) return std::nullopt;
  return records_[it->second];
}

void ScoreCache::append(const ScoreRecord& record) {
  std::lock_guard lock(mu_);
  if (!path_.empty()) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) fail(ErrorCode::kIo, "cannot append to score cache " + path_.string());
    out << score_record_to_json(record) << '\n';
    out.flush();
    if (!out) fail(ErrorCode::kIo, "write failed on score cache " + path_.string());
  }
  index_[Key{record.scorer_id, record.poem_id, record.run_index}] = records_.size();
  records_.push_back(record);
}

std::vector<ScoreRecord> ScoreCache::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

std::size_t ScoreCache::size() const {
  std::lock_guard lock(mu_);
  return index_.size();
}

}  // namespace divan
