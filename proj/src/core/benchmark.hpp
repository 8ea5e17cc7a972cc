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

#ifndef DIVAN_CORE_BENCHMARK_HPP_
#define DIVAN_CORE_BENCHMARK_HPP_

#include <map>
#include <string>
#include <vector>

#include "core/aggregation.hpp"
#include "core/score.hpp"

namespace divan {

struct ValidationSample {
  std::vector<std::string> high_disagreement_ids;
  std::vector<std::string> consensus_ids;
};

/// scorer id -> (poem id -> score)
using ScoresByScorer = std::map<std::string, std::map<std::string, SentimentScore>>;

/// Ranks poems by the population std of their scores across scorers.
/// The top `n_high` (ties by ascending id) form the disagreement list; the
/// consensus list takes `n_consensus` zero-std poems not already chosen,
/// again by ascending id.
ValidationSample select_validation_sample(const ScoresByScorer& scores, std::size_t n_high, std::size_t n_consensus);

struct BenchmarkRow {
  std::string evaluator_id;
  double qwk = 0.0;
  double accuracy_pct = 0.0;
};

/// One row per evaluator against the ground-truth labels, sorted by
/// descending QWK then evaluator id. Every rating list must align with the
/// ground-truth item order.
std::vector<BenchmarkRow> benchmark_scorers(const GroundTruth& truth, const std::map<std::string, ScoreList>& evaluators);

std::string benchmark_to_csv(const std::vector<BenchmarkRow>& rows);

}  // namespace divan

#endif  // DIVAN_CORE_BENCHMARK_HPP_
