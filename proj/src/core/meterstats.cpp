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

#include "core/meterstats.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace divan {

namespace {

constexpr std::size_t K = SentimentScore::kLevels;

void require_non_empty(std::span<const SentimentScore> scores) {
  if (scores.empty()) fail(ErrorCode::kInvalidArgument, "statistic of an empty score list");
}

double share(std::span<const SentimentScore> scores, bool (*pred)(int)) {
  require_non_empty(scores);
  std::size_t hits = 0;
  for (auto s : scores) hits += pred(s.value());
  return static_cast<double>(hits) / static_cast<double>(scores.size());
}

}  // namespace

SentimentDistribution::SentimentDistribution(std::array<double, K> p) : p_(p) {
  double total = 0.0;
  for (double x : p_) {
    if (!(x >= 0.0)) fail(ErrorCode::kInvalidArgument, "distribution has a negative or NaN probability");
    total += x;
  }
  if (std::fabs(total - 1.0) > 1e-9) fail(ErrorCode::kInvalidArgument, "distribution does not sum to 1");
}

SentimentDistribution sentiment_distribution(std::span<const SentimentScore> scores) {
  require_non_empty(scores);
  std::array<double, K> counts{};
  for (auto s : scores) counts[s.index()] += 1.0;
  for (double& c : counts) c /= static_cast<double>(scores.size());
  return SentimentDistribution(counts);
}

double entropy(const SentimentDistribution& dist) {
  double h = 0.0;
  for (double p : dist.p()) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return std::clamp(h, 0.0, std::log2(static_cast<double>(K)));
}

double mean_sentiment(std::span<const SentimentScore> scores) { return mean_of(scores); }

double std_dev(std::span<const SentimentScore> scores, std::optional<double> reference_mean) {
  require_non_empty(scores);
  const double center = reference_mean ? *reference_mean : mean_of(scores);
  double ss = 0.0;
  for (auto s : scores) {
    const double d = s.value() - center;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(scores.size()));
}

double happy_fraction(std::span<const SentimentScore> scores) {
  return share(scores, [](int v) { return v >= 4; });
}

Polarization polarization(std::span<const SentimentScore> scores) {
  const double neutral = share(scores, [](int v) { return v == 3; });
  return {share(scores, [](int v) { return v != 3; }), neutral};
}

MeterStats summarize(std::string meter_code, std::span<const SentimentScore> scores,
                     std::optional<double> reference_mean) {
  require_non_empty(scores);
  MeterStats row;
  row.meter_code = std::move(meter_code);
  row.n_poems = scores.size();
  row.mean_sentiment = mean_sentiment(scores);
  row.std_dev = std_dev(scores, reference_mean);
  row.entropy_bits = entropy(sentiment_distribution(scores));
  row.happy_fraction = happy_fraction(scores);
  const Polarization pol = polarization(scores);
  row.polarized_fraction = pol.polarized;
  row.neutral_fraction = pol.neutral;
  return row;
}

std::vector<MeterStats> compute_meter_stats(const MeterScores& groups, double corpus_mean) {
  std::vector<MeterStats> rows;
  rows.reserve(groups.size());
  for (const auto& [code, scores] : groups) {
    if (scores.empty()) fail(ErrorCode::kInvalidArgument, "meter group '" + code + "' is empty");
    rows.push_back(summarize(code, scores, corpus_mean));
  }
  return rows;
}

}  // namespace divan
