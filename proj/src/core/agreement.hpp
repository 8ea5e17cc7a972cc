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

#ifndef DIVAN_CORE_AGREEMENT_HPP_
#define DIVAN_CORE_AGREEMENT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/score.hpp"

namespace divan {

/// Items x raters grid of optional sentiment scores.
class RatingMatrix {
 public:
  RatingMatrix(std::vector<std::string> item_ids, std::vector<std::string> rater_ids);

  /// Test helper: rows of integers, 0 marks a missing cell. Items are named
  /// i0, i1, ... and raters r0, r1, ...
  static RatingMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t items() const { return item_ids_.size(); }
  std::size_t raters() const { return rater_ids_.size(); }
  const std::vector<std::string>& item_ids() const { return item_ids_; }
  const std::vector<std::string>& rater_ids() const { return rater_ids_; }

  const std::optional<SentimentScore>& at(std::size_t item, std::size_t rater) const {
    return cells_[item * raters() + rater];
  }
  void set(std::size_t item, std::size_t rater, std::optional<SentimentScore> score) {
    cells_[item * raters() + rater] = score;
  }

  bool complete() const;

  /// Present ratings for one item, in rater order.
  ScoreList item_ratings(std::size_t item) const;

  /// One rater's scores over all items; throws kIncompleteMatrix on a gap.
  ScoreList rater_column(std::size_t rater) const;

  /// Copy restricted to the given item indices, in that order.
  RatingMatrix select_items(std::span<const std::size_t> items) const;

 private:
  std::vector<std::string> item_ids_;
  std::vector<std::string> rater_ids_;
  std::vector<std::optional<SentimentScore>> cells_;
};

struct FleissResult {
  double kappa = 1.0;
  /// Set when every rating falls in one category (expected agreement is 1);
  /// kappa is reported as 1.0 in that case.
  bool all_agree = false;
};

/// Fleiss' kappa with scores treated as nominal categories. Requires a
/// complete matrix with at least two raters.
FleissResult fleiss_kappa_nominal(const RatingMatrix& matrix);

enum class Difference { kInterval, kOrdinal };

/// Krippendorff's alpha from the coincidence matrix. Missing cells are
/// allowed; items with fewer than two ratings are not pairable and ignored.
double krippendorff_alpha(const RatingMatrix& matrix, Difference difference = Difference::kInterval);

/// Cohen's kappa with quadratic weights over the five score levels,
/// 1 - observed / expected weighted disagreement. Two identical constant
/// raters give 1.0.
double cohen_qwk(std::span<const SentimentScore> a, std::span<const SentimentScore> b);

double avg_qwk_vs_annotators(std::span<const SentimentScore> candidate, std::span<const ScoreList> annotators);

/// Percentage of exact matches.
double absolute_accuracy(std::span<const SentimentScore> predicted, std::span<const SentimentScore> truth);

/// Mean QWK over rater pairs, each pair restricted to items both rated.
/// Pairs sharing no items are skipped; NaN when no pair qualifies.
double mean_pairwise_qwk(const RatingMatrix& matrix);

}  // namespace divan

#endif  // DIVAN_CORE_AGREEMENT_HPP_
