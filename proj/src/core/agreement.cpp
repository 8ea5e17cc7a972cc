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

#include "core/agreement.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "core/error.hpp"

namespace divan {

namespace {

constexpr std::size_t K = SentimentScore::kLevels;

}  // namespace

RatingMatrix::RatingMatrix(std::vector<std::string> item_ids, std::vector<std::string> rater_ids)
    : item_ids_(std::move(item_ids)),
      rater_ids_(std::move(rater_ids)),
      cells_(item_ids_.size() * rater_ids_.size()) {}

RatingMatrix RatingMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t raters = rows.empty() ? 0 : rows.front().size();
  std::vector<std::string> items, rater_ids;
  for (std::size_t i = 0; i < rows.size(); ++i) items.push_back("i" + std::to_string(i));
  for (std::size_t r = 0; r < raters; ++r) rater_ids.push_back("r" + std::to_string(r));
  RatingMatrix m(std::move(items), std::move(rater_ids));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != raters) fail(ErrorCode::kInvalidArgument, "ragged rating rows");
    for (std::size_t r = 0; r < raters; ++r) {
      if (rows[i][r] != 0) m.set(i, r, SentimentScore(rows[i][r]));
    }
  }
  return m;
}

bool RatingMatrix::complete() const {
  for (const auto& c : cells_) {
    if (!c) return false;
  }
  return true;
}

ScoreList RatingMatrix::item_ratings(std::size_t item) const {
  ScoreList out;
  for (std::size_t r = 0; r < raters(); ++r) {
    if (const auto& c = at(item, r)) out.push_back(*c);
  }
  return out;
}

ScoreList RatingMatrix::rater_column(std::size_t rater) const {
  ScoreList out;
  out.reserve(items());
  for (std::size_t i = 0; i < items(); ++i) {
    const auto& c = at(i, rater);
    if (!c) {
      fail(ErrorCode::kIncompleteMatrix, "rater '" + rater_ids_[rater] + "' has no rating for item '" + item_ids_[i] + "'");
    }
    out.push_back(*c);
  }
  return out;
}

RatingMatrix RatingMatrix::select_items(std::span<const std::size_t> items) const {
  std::vector<std::string> ids;
  for (std::size_t i : items) ids.push_back(item_ids_.at(i));
  RatingMatrix out(std::move(ids), rater_ids_);
  for (std::size_t k = 0; k < items.size(); ++k) {
    for (std::size_t r = 0; r < raters(); ++r) out.set(k, r, at(items[k], r));
  }
  return out;
}

FleissResult fleiss_kappa_nominal(const RatingMatrix& m) {
  if (m.items() < 1) fail(ErrorCode::kInvalidArgument, "Fleiss' kappa needs at least one item");
  if (m.raters() < 2) fail(ErrorCode::kInvalidArgument, "Fleiss' kappa needs at least two raters per item");
  if (!m.complete()) fail(ErrorCode::kIncompleteMatrix, "Fleiss' kappa requires every rater to rate every item");

  const double n = static_cast<double>(m.raters());
  const double N = static_cast<double>(m.items());
  std::array<double, K> category_totals{};
  double p_bar = 0.0;
  for (std::size_t i = 0; i < m.items(); ++i) {
    std::array<double, K> counts{};
    for (std::size_t r = 0; r < m.raters(); ++r) counts[m.at(i, r)->index()] += 1.0;
    double sum_sq = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      sum_sq += counts[k] * counts[k];
      category_totals[k] += counts[k];
    }
    p_bar += (sum_sq - n) / (n * (n - 1.0));
  }
  p_bar /= N;

  double p_e = 0.0;
  for (double total : category_totals) {
    const double p = total / (N * n);
    p_e += p * p;
  }
  for (double total : category_totals) {
    if (total == N * n) return {1.0, true};
  }
  if (p_bar == 1.0) return {1.0, false};
  return {(p_bar - p_e) / (1.0 - p_e), false};
}

double krippendorff_alpha(const RatingMatrix& m, Difference difference) {
  // Coincidence matrix o[c][k] over pairable units.
  std::array<std::array<double, K>, K> o{};
  for (std::size_t i = 0; i < m.items(); ++i) {
    const ScoreList values = m.item_ratings(i);
    if (values.size() < 2) continue;
    const double weight = 1.0 / static_cast<double>(values.size() - 1);
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = 0; b < values.size(); ++b) {
        if (a != b) o[values[a].index()][values[b].index()] += weight;
      }
    }
  }
  std::array<double, K> marginals{};
  double n = 0.0;
  for (std::size_t c = 0; c < K; ++c) {
    for (std::size_t k = 0; k < K; ++k) marginals[c] += o[c][k];
    n += marginals[c];
  }
  if (n < 2.0) fail(ErrorCode::kInsufficientData, "Krippendorff's alpha needs at least two pairable values");

  auto delta = [&](std::size_t c, std::size_t k) -> double {
    if (difference == Difference::kInterval) {
      const double d = static_cast<double>(c) - static_cast<double>(k);
      return d * d;
    }
    const std::size_t lo = std::min(c, k), hi = std::max(c, k);
    double s = 0.0;
    for (std::size_t g = lo; g <= hi; ++g) s += marginals[g];
    s -= (marginals[c] + marginals[k]) / 2.0;
    return s * s;
  };

  double observed = 0.0, expected = 0.0;
  for (std::size_t c = 0; c < K; ++c) {
    for (std::size_t k = 0; k < K; ++k) {
      if (c == k) continue;
      const double d = delta(c, k);
      observed += o[c][k] * d;
      expected += marginals[c] * marginals[k] * d;
    }
  }
  observed /= n;
  expected /= n * (n - 1.0);
  if (expected == 0.0) {
    if (observed > 0.0) fail(ErrorCode::kDegenerateInput, "zero expected disagreement with observed disagreement");
    return 1.0;
  }
  return 1.0 - observed / expected;
}

double cohen_qwk(std::span<const SentimentScore> a, std::span<const SentimentScore> b) {
  if (a.size() != b.size()) fail(ErrorCode::kInvalidArgument, "QWK rating lists differ in length");
  if (a.empty()) fail(ErrorCode::kInvalidArgument, "QWK needs at least one rating pair");
  const double N = static_cast<double>(a.size());
  std::array<double, K> row{}, col{};
  double observed = 0.0;
  auto weight = [](std::size_t i, std::size_t j) {
    const double d = static_cast<double>(i) - static_cast<double>(j);
    return d * d / static_cast<double>((K - 1) * (K - 1));
  };
  for (std::size_t t = 0; t < a.size(); ++t) {
    row[a[t].index()] += 1.0;
    col[b[t].index()] += 1.0;
    observed += weight(a[t].index(), b[t].index());
  }
  observed /= N;
  double expected = 0.0;
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t j = 0; j < K; ++j) expected += weight(i, j) * row[i] * col[j];
  }
  expected /= N * N;
  if (expected == 0.0) return 1.0;
  return 1.0 - observed / expected;
}

double avg_qwk_vs_annotators(std::span<const SentimentScore> candidate, std::span<const ScoreList> annotators) {
  if (annotators.empty()) fail(ErrorCode::kInvalidArgument, "need at least one annotator");
  double sum = 0.0;
  for (const ScoreList& annotator : annotators) {
    if (annotator.size() != candidate.size()) {
      fail(ErrorCode::kInvalidArgument, "annotator rating list length differs from candidate");
    }
    sum += cohen_qwk(candidate, annotator);
  }
  return sum / static_cast<double>(annotators.size());
}

double absolute_accuracy(std::span<const SentimentScore> predicted, std::span<const SentimentScore> truth) {
  if (predicted.size() != truth.size()) fail(ErrorCode::kInvalidArgument, "prediction and truth lengths differ");
  if (predicted.empty()) fail(ErrorCode::kInvalidArgument, "accuracy needs at least one item");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) hits += predicted[i] == truth[i];
  return 100.0 * static_cast<double>(hits) / static_cast<double>(predicted.size());
}

double mean_pairwise_qwk(const RatingMatrix& m) {
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t r1 = 0; r1 < m.raters(); ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < m.raters(); ++r2) {
      ScoreList a, b;
      for (std::size_t i = 0; i < m.items(); ++i) {
        if (m.at(i, r1) && m.at(i, r2)) {
          a.push_back(*m.at(i, r1));
          b.push_back(*m.at(i, r2));
        }
      }
      if (a.empty()) continue;
      sum += cohen_qwk(a, b);
      ++pairs;
    }
  }
  return pairs ? sum / static_cast<double>(pairs) : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace divan
