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

#ifndef DIVAN_CORE_METERSTATS_HPP_
#define DIVAN_CORE_METERSTATS_HPP_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/corpus.hpp"
#include "core/score.hpp"

namespace divan {

/// Probabilities of scores 1..5; non-negative and summing to 1 within 1e-9.
class SentimentDistribution {
 public:
  explicit SentimentDistribution(std::array<double, SentimentScore::kLevels> p);

  const std::array<double, SentimentScore::kLevels>& p() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::array<double, SentimentScore::kLevels> p_;
};

SentimentDistribution sentiment_distribution(std::span<const SentimentScore> scores);

/// Shannon entropy in bits; empty categories contribute nothing. Result is
/// kept inside [0, log2 5].
double entropy(const SentimentDistribution& dist);

double mean_sentiment(std::span<const SentimentScore> scores);

/// Population standard deviation about `reference_mean`, or about the
/// list's own mean when none is given.
double std_dev(std::span<const SentimentScore> scores, std::optional<double> reference_mean = std::nullopt);

/// Share of scores 4 and 5.
double happy_fraction(std::span<const SentimentScore> scores);

struct Polarization {
  double polarized = 0.0;  // scores 1, 2, 4, 5
  double neutral = 0.0;    // score 3
};

Polarization polarization(std::span<const SentimentScore> scores);

struct MeterStats {
  std::string meter_code;
  std::size_t n_poems = 0;
  double mean_sentiment = 0.0;
  double std_dev = 0.0;
  double entropy_bits = 0.0;
  double happy_fraction = 0.0;
  double polarized_fraction = 0.0;
  double neutral_fraction = 0.0;
};

MeterStats summarize(std::string meter_code, std::span<const SentimentScore> scores, std::optional<double> reference_mean);

using MeterScores = std::map<std::string, ScoreList, MeterCodeLess>;

/// One row per group, ordered by meter code, with std_dev taken about
/// `corpus_mean`.
std::vector<MeterStats> compute_meter_stats(const MeterScores& groups, double corpus_mean);

}  // namespace divan

#endif  // DIVAN_CORE_METERSTATS_HPP_
