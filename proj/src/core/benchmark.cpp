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

#include "core/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/agreement.hpp"
#include "core/error.hpp"
#include "core/meterstats.hpp"
#include "core/report.hpp"

namespace divan {

ValidationSample select_validation_sample(const ScoresByScorer& scores, std::size_t n_high, std::size_t n_consensus) {
  if (scores.size() < 2) fail(ErrorCode::kInvalidArgument, "validation sampling needs at least two scorers");
  const auto& reference = scores.begin()->second;
  for (const auto& [scorer, poems] : scores) {
    bool same = poems.size() == reference.size() &&
                std::equal(poems.begin(), poems.end(), reference.begin(),
                           [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
      fail(ErrorCode::kCoverageMismatch, "scorer '" + scorer + "' does not cover the same poems as '" +
                                             scores.begin()->first + "'");
    }
  }
  if (n_high + n_consensus > reference.size()) {
    fail(ErrorCode::kInsufficientData, "requested " + std::to_string(n_high + n_consensus) +
                                           " poems but only " + std::to_string(reference.size()) + " are scored");
  }

  struct Spread {
    std::string id;
    double std;
  };
  std::vector<Spread> spreads;
  for (const auto& [poem_id, unused] : reference) {
    ScoreList across;
    for (const auto& [scorer, poems] : scores) across.push_back(poems.at(poem_id));
    spreads.push_back({poem_id, std_dev(across)});
  }
  std::stable_sort(spreads.begin(), spreads.end(),
                   [](const Spread& a, const Spread& b) { return a.std > b.std; });

  ValidationSample sample;
  std::set<std::string> taken;
  for (std::size_t k = 0; k < n_high; ++k) {
    sample.high_disagreement_ids.push_back(spreads[k].id);
    taken.insert(spreads[k].id);
  }
  for (const auto& [poem_id, unused] : reference) {
    if (sample.consensus_ids.size() == n_consensus) break;
    if (taken.count(poem_id)) continue;
    ScoreList across;
    for (const auto& [scorer, poems] : scores) across.push_back(poems.at(poem_id));
    if (std_dev(across) == 0.0) sample.consensus_ids.push_back(poem_id);
  }
  if (sample.consensus_ids.size() < n_consensus) {
    fail(ErrorCode::kInsufficientData,
         "consensus quota short by " + std::to_string(n_consensus - sample.consensus_ids.size()) + ": only " +
             std::to_string(sample.consensus_ids.size()) + " zero-disagreement poems available, " +
             std::to_string(n_consensus) + " requested");
  }
  return sample;
}

std::vector<BenchmarkRow> benchmark_scorers(const GroundTruth& truth, const std::map<std::string, ScoreList>& evaluators) {
  std::vector<BenchmarkRow> rows;
  for (const auto& [id, ratings] : evaluators) {
    if (ratings.size() != truth.labels.size()) {
      fail(ErrorCode::kCoverageMismatch, "evaluator '" + id + "' rates " + std::to_string(ratings.size()) +
                                             " items, ground truth has " + std::to_string(truth.labels.size()));
    }
    rows.push_back({id, cohen_qwk(ratings, truth.labels), absolute_accuracy(ratings, truth.labels)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchmarkRow& a, const BenchmarkRow& b) {
    if (a.qwk != b.qwk) return a.qwk > b.qwk;
    return a.evaluator_id < b.evaluator_id;
  });
  return rows;
}

std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows) {
  CsvWriter csv({"evaluator_id", "qwk", "accuracy_pct"});
  for (const auto& r : rows) csv.row({r.evaluator_id, format_real(r.qwk), format_real(r.accuracy_pct)});
  return csv.str();
}

}  // namespace divan
