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

#include "core/score.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"

namespace divan {

SentimentScore::SentimentScore(int value) : value_(value) {
  if (!valid(value)) {
    fail(ErrorCode::kInvalidArgument,
         "sentiment score out of range 1..5: " + std::to_string(value));
  }
}

int round_half_away(double x) { return static_cast<int>(std::lround(x)); }

SentimentScore round_to_score(double x) {
  return SentimentScore(std::clamp(round_half_away(x), SentimentScore::kMin,
                                   SentimentScore::kMax));
}

double mean_of(std::span<const SentimentScore> scores) {
  if (scores.empty()) fail(ErrorCode::kInvalidArgument, "empty score list");
  long sum = 0;
  for (auto s : scores) sum += s.value();
  return static_cast<double>(sum) / static_cast<double>(scores.size());
}

ScoreList to_scores(std::span<const int> values) {
  ScoreList out;
  out.reserve(values.size());
  for (int v : values) out.emplace_back(v);
  return out;
}

}  // namespace divan
