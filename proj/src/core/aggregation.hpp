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

#ifndef DIVAN_CORE_AGGREGATION_HPP_
#define DIVAN_CORE_AGGREGATION_HPP_

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/agreement.hpp"
#include "core/score.hpp"

namespace divan {

enum class AggregationMethod { kMean, kMedian, kMode, kDawidSkene };

/// Selection preference order; earlier methods win ties.
inline constexpr std::array<AggregationMethod, 4> kAggregationMethods = {
    AggregationMethod::kMean, AggregationMethod::kMedian, AggregationMethod::kMode,
    AggregationMethod::kDawidSkene};

std::string_view aggregation_method_name(AggregationMethod method);
AggregationMethod parse_aggregation_method(std::string_view name);

SentimentScore aggregate_mean(std::span<const SentimentScore> ratings);

/// Even counts take the midpoint of the two middle values, rounded half away
/// from zero.
SentimentScore aggregate_median(std::span<const SentimentScore> ratings);

/// Most frequent score. Ties go to the tied score nearest the unrounded mean,
/// then to the lower score.
SentimentScore aggregate_mode(std::span<const SentimentScore> ratings);

using ConfusionMatrix = std::array<std::array<double, SentimentScore::kLevels>, SentimentScore::kLevels>;

/// Row t, column r: probability that the rater emits score r+1 when the true
/// score is t+1.
struct AnnotatorConfusion {
  std::string rater_id;
  ConfusionMatrix matrix{};
};

struct DawidSkeneOptions {
  double tol = 1e-6;
  int max_iter = 500;
  double smoothing = 1e-9;
};

struct DawidSkeneResult {
  ScoreList labels;
  std::vector<std::array<double, SentimentScore::kLevels>> posteriors;
  std::vector<AnnotatorConfusion> confusions;
  std::array<double, SentimentScore::kLevels> priors{};
  int iterations = 0;
  bool converged = false;
  /// Data log-likelihood after each EM round.
  std::vector<double> log_likelihood;
};

/// EM for the Dawid-Skene annotator model. Posteriors start from vote
/// fractions; each round re-estimates priors and confusion rows (additively
/// smoothed) and then the posteriors. Stops when no posterior moves by tol or
/// more, or after max_iter rounds. Labels are MAP classes, ties to the lower
/// score.
DawidSkeneResult dawid_skene(const RatingMatrix& matrix, const DawidSkeneOptions& options = {});

struct GroundTruth {
  AggregationMethod method = AggregationMethod::kMean;
  std::vector<std::string> item_ids;
  ScoreList labels;
  /// Average QWK of the labels against every annotator.
  double selection_score = 0.0;
};

struct GroundTruthSelection {
  /// One per method, in kAggregationMethods order.
  std::vector<GroundTruth> candidates;
  std::size_t selected = 0;
  DawidSkeneResult dawid_skene;

  const GroundTruth& winner() const { return candidates.at(selected); }
};

/// Runs all four aggregators over a complete matrix and keeps the one with
/// the highest average QWK against the annotators.
GroundTruthSelection select_ground_truth(const RatingMatrix& matrix, const DawidSkeneOptions& options = {});

/// CSV `poem_id,label,method`.
std::string ground_truth_to_csv(const GroundTruth& truth);
GroundTruth parse_ground_truth_csv(std::string_view text);
GroundTruth load_ground_truth_csv(const std::filesystem::path& path);

/// Priors, per-rater confusion matrices, iterations, convergence flag and the
/// log-likelihood trace as pretty-printed JSON.
std::string dawid_skene_diagnostics_json(const DawidSkeneResult& result);

}  // namespace divan

#endif  // DIVAN_CORE_AGGREGATION_HPP_
