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

#include <gtest/gtest.h>

#include "core/error.hpp"

namespace divan {
namespace {

ScoreList S(std::vector<int> v) { return to_scores(v); }

ScoresByScorer table(const std::map<std::string, std::vector<int>>& by_poem, std::size_t scorers) {
  ScoresByScorer out;
  for (std::size_t k = 0; k < scorers; ++k) {
    for (const auto& [poem, values] : by_poem) out["s" + std::to_string(k)].emplace(poem, SentimentScore(values[k]));
  }
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(ValidationSample, AllAgree) {
  const auto s = select_validation_sample(
      table({{"p1", {3, 3}}, {"p2", {1, 1}}, {"p3", {5, 5}}, {"p4", {2, 2}}, {"p5", {4, 4}}, {"p6", {4, 4}}}, 2), 0,
      5);
  EXPECT_TRUE(s.high_disagreement_ids.empty());
  EXPECT_EQ(s.consensus_ids, (std::vector<std::string>{"p1", "p2", "p3", "p4", "p5"}));
}

TEST(ValidationSample, ForcedOrdering) {
  const auto s = select_validation_sample(table({{"p1", {1, 5}}, {"p2", {3, 3}}}, 2), 1, 1);
  EXPECT_EQ(s.high_disagreement_ids, std::vector<std::string>{"p1"});
  EXPECT_EQ(s.consensus_ids, std::vector<std::string>{"p2"});
}

TEST(ValidationSample, TiesByIdAndDisjoint) {
  const auto s = select_validation_sample(
      table({{"p9", {1, 5}}, {"p1", {1, 5}}, {"p5", {2, 3}}, {"p3", {4, 4}}, {"p2", {4, 4}}}, 2), 3, 2);
  EXPECT_EQ(s.high_disagreement_ids, (std::vector<std::string>{"p1", "p9", "p5"}));
  EXPECT_EQ(s.consensus_ids, (std::vector<std::string>{"p2", "p3"}));
}

TEST(ValidationSample, ConsensusShortfall) {
  try {
    select_validation_sample(table({{"p1", {1, 5}}, {"p2", {3, 3}}, {"p3", {2, 2}}, {"p4", {1, 2}}}, 2), 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientData);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos);
  }
}

TEST(ValidationSample, Preconditions) {
  EXPECT_EQ(code_of([] { select_validation_sample(table({{"p1", {1}}}, 1), 0, 0); }), ErrorCode::kInvalidArgument);
  auto mismatched = table({{"p1", {1, 2}}, {"p2", {1, 2}}}, 2);
  mismatched["s1"].erase("p2");
  EXPECT_EQ(code_of([&] { select_validation_sample(mismatched, 0, 0); }), ErrorCode::kCoverageMismatch);
  EXPECT_EQ(code_of([] { select_validation_sample(table({{"p1", {1, 2}}}, 2), 1, 1); }),
            ErrorCode::kInsufficientData);
}

TEST(BenchmarkScorers, IdentityAndConstant) {
  GroundTruth truth;
  truth.item_ids = {"a", "b", "c", "d", "e"};
  truth.labels = S({1, 3, 5, 3, 4});
  const auto rows = benchmark_scorers(truth, {{"gold", truth.labels}, {"flat", S({3, 3, 3, 3, 3})}});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].evaluator_id, "gold");
  EXPECT_EQ(rows[0].qwk, 1.0);
  EXPECT_EQ(rows[0].accuracy_pct, 100.0);
  EXPECT_EQ(rows[1].evaluator_id, "flat");
  EXPECT_DOUBLE_EQ(rows[1].accuracy_pct, 40.0);
  EXPECT_LE(rows[1].qwk, 1e-12);
}

TEST(BenchmarkScorers, SortedAndIndependentRows) {
  GroundTruth truth;
  truth.item_ids = {"a", "b", "c", "d"};
  truth.labels = S({1, 2, 4, 5});
  const std::map<std::string, ScoreList> two{{"x", S({2, 2, 4, 4})}, {"y", S({5, 4, 2, 1})}};
  auto rows = benchmark_scorers(truth, two);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GT(rows[0].qwk, rows[1].qwk);
  EXPECT_EQ(rows[0].evaluator_id, "x");
  auto three = two;
  three["z"] = S({1, 2, 4, 4});
  const auto more = benchmark_scorers(truth, three);
  for (const auto& r : rows) {
    auto it = std::find_if(more.begin(), more.end(), [&](const BenchmarkRow& m) { return m.evaluator_id == r.evaluator_id; });
    ASSERT_NE(it, more.end());
    EXPECT_EQ(it->qwk, r.qwk);
    EXPECT_EQ(it->accuracy_pct, r.accuracy_pct);
  }
  EXPECT_EQ(benchmark_to_csv(rows).substr(0, 27), "evaluator_id,qwk,accuracy_p");
  EXPECT_THROW(benchmark_scorers(truth, {{"short", S({1, 2})}}), Error);
}

}  // namespace
}  // namespace divan
