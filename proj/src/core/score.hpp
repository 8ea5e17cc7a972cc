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

#ifndef DIVAN_CORE_SCORE_HPP_
#define DIVAN_CORE_SCORE_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace divan {

/// Ordinal sentiment on the 1 (sad) .. 5 (happy) scale; 3 is neutral.
class SentimentScore {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 5;
  static constexpr int kLevels = kMax - kMin + 1;

  /// Throws Error(kInvalidArgument) outside 1..5.
  explicit SentimentScore(int value);

  constexpr int value() const noexcept { return value_; }
  /// Zero-based category index (score 1 -> 0).
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(value_ - kMin);
  }

  static bool valid(int value) noexcept { return value >= kMin && value <= kMax; }

  friend constexpr auto operator<=>(SentimentScore, SentimentScore) = default;

 private:
  int value_;
};

using ScoreList = std::vector<SentimentScore>;

/// Nearest integer with halves rounded away from zero (4.5 -> 5).
int round_half_away(double x);

/// Rounds half away from zero and clamps into 1..5.
SentimentScore round_to_score(double x);

double mean_of(std::span<const SentimentScore> scores);

ScoreList to_scores(std::span<const int> values);

}  // namespace divan

#endif  // DIVAN_CORE_SCORE_HPP_
