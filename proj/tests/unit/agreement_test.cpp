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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "core/annotations.hpp"
#include "core/error.hpp"
#include "oracle.hpp"

namespace divan {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

ScoreList S(std::vector<int> v) { return to_scores(v); }

std::vector<std::vector<int>> random_grid(std::mt19937_64& rng, std::size_t items, std::size_t raters, int hi = 5) {
  std::vector<std::vector<int>> g(items, std::vector<int>(raters));
  for (auto& row : g) {
    for (int& x : row) x = 1 + static_cast<int>(rng() % hi);
  }
  return g;
}

TEST(Fleiss, PerfectAgreementIsOne) {
  const auto r = fleiss_kappa_nominal(RatingMatrix::from_rows({{1, 1, 1}, {5, 5, 5}, {3, 3, 3}}));
  EXPECT_EQ(r.kappa, 1.0);
  EXPECT_FALSE(r.all_agree);
}

TEST(Fleiss, HandEvaluatedExample) {
  const auto r = fleiss_kappa_nominal(RatingMatrix::from_rows({{1, 1, 2}, {1, 2, 2}, {1, 1, 2}}));
  EXPECT_NEAR(r.kappa, -0.35, 1e-9);
}

TEST(Fleiss, SingleCategoryEverywhere) {
  const auto r = fleiss_kappa_nominal(RatingMatrix::from_rows({{4, 4}, {4, 4}}));
  EXPECT_EQ(r.kappa, 1.0);
  EXPECT_TRUE(r.all_agree);
}

TEST(Fleiss, Preconditions) {
  EXPECT_EQ(code_of([] { fleiss_kappa_nominal(RatingMatrix::from_rows({{1, 0, 2}})); }),
            ErrorCode::kIncompleteMatrix);
  EXPECT_EQ(code_of([] { fleiss_kappa_nominal(RatingMatrix::from_rows({{1}, {2}})); }),
            ErrorCode::kInvalidArgument);
}

TEST(Fleiss, InvariantUnderCategoryRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_grid(rng, 2 + rng() % 6, 2 + rng() % 4);
    const double base = fleiss_kappa_nominal(RatingMatrix::from_rows(g)).kappa;
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    for (auto& row : g) {
      for (int& x : row) x = perm[x];
    }
    EXPECT_NEAR(fleiss_kappa_nominal(RatingMatrix::from_rows(g)).kappa, base, 1e-12);
  }
}

TEST(Alpha, PerfectAgreementIsOne) {
  EXPECT_EQ(krippendorff_alpha(RatingMatrix::from_rows({{1, 1}, {2, 2}, {3, 3}, {4, 4}})), 1.0);
  EXPECT_EQ(krippendorff_alpha(RatingMatrix::from_rows({{1, 1}, {2, 2}, {3, 3}, {4, 4}}), Difference::kOrdinal), 1.0);
}

TEST(Alpha, HandEvaluatedExample) {
  EXPECT_NEAR(krippendorff_alpha(RatingMatrix::from_rows({{1, 5}, {5, 1}})), -0.5, 1e-9);
}

TEST(Alpha, ToleratesMissingCells) {
  const auto m = RatingMatrix::from_rows({{1, 1, 0}, {2, 0, 2}, {0, 4, 4}, {5, 0, 0}});
  EXPECT_EQ(krippendorff_alpha(m), 1.0);
  const std::vector<std::vector<int>> g = {{1, 2, 0}, {3, 0, 3}, {0, 5, 4}, {2, 2, 1}};
  EXPECT_NEAR(krippendorff_alpha(RatingMatrix::from_rows(g)), oracle::alpha_interval(g), 1e-12);
}

TEST(Alpha, Errors) {
  EXPECT_EQ(code_of([] { krippendorff_alpha(RatingMatrix::from_rows({{1, 0}, {0, 2}})); }),
            ErrorCode::kInsufficientData);
}

TEST(Alpha, OrdinalDiffersFromIntervalOnUnevenMarginals) {
  const auto m = RatingMatrix::from_rows({{1, 2}, {1, 1}, {2, 5}, {5, 5}, {1, 1}});
  EXPECT_NE(krippendorff_alpha(m, Difference::kOrdinal), krippendorff_alpha(m, Difference::kInterval));
  EXPECT_LE(krippendorff_alpha(m, Difference::kOrdinal), 1.0);
}

TEST(Alpha, InvariantUnderItemAndRaterPermutation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_grid(rng, 2 + rng() % 6, 2 + rng() % 4);
    const double base = krippendorff_alpha(RatingMatrix::from_rows(g));
    std::shuffle(g.begin(), g.end(), rng);
    std::vector<std::size_t> cols(g[0].size());
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    auto h = g;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t r = 0; r < cols.size(); ++r) h[i][r] = g[i][cols[r]];
    }
    EXPECT_NEAR(krippendorff_alpha(RatingMatrix::from_rows(h)), base, 1e-12);
  }
}

TEST(Qwk, Examples) {
  EXPECT_EQ(cohen_qwk(S({1, 2, 3, 4, 5}), S({1, 2, 3, 4, 5})), 1.0);
  EXPECT_NEAR(cohen_qwk(S({1, 2, 3, 4, 5}), S({5, 4, 3, 2, 1})), -1.0, 1e-9);
  EXPECT_EQ(cohen_qwk(S({3, 3, 3}), S({3, 3, 3})), 1.0);
  EXPECT_EQ(code_of([] { cohen_qwk(S({1, 2}), S({1})); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { cohen_qwk(ScoreList{}, ScoreList{}); }), ErrorCode::kInvalidArgument);
}

TEST(Qwk, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    std::vector<int> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = 1 + static_cast<int>(rng() % 5);
      b[i] = 1 + static_cast<int>(rng() % 5);
    }
    const double ab = cohen_qwk(S(a), S(b));
    EXPECT_NEAR(ab, cohen_qwk(S(b), S(a)), 1e-12);
    EXPECT_NEAR(ab, oracle::qwk(a, b), 1e-9);
    EXPECT_GE(ab, -1.0 - 1e-12);
    EXPECT_LE(ab, 1.0 + 1e-12);
  }
}

TEST(AvgQwk, Examples) {
  const ScoreList up = S({1, 2, 3, 4, 5}), down = S({5, 4, 3, 2, 1});
  EXPECT_EQ(avg_qwk_vs_annotators(up, std::vector<ScoreList>{up, up}), 1.0);
  EXPECT_DOUBLE_EQ(avg_qwk_vs_annotators(up, std::vector<ScoreList>{down}), cohen_qwk(up, down));
  EXPECT_NEAR(avg_qwk_vs_annotators(up, std::vector<ScoreList>{up, down}), 0.0, 1e-12);
  EXPECT_EQ(code_of([&] { avg_qwk_vs_annotators(up, std::vector<ScoreList>{S({1})}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { avg_qwk_vs_annotators(up, std::vector<ScoreList>{}); }), ErrorCode::kInvalidArgument);
}

TEST(Accuracy, Examples) {
  EXPECT_EQ(absolute_accuracy(S({1, 2, 3}), S({1, 2, 3})), 100.0);
  EXPECT_EQ(absolute_accuracy(S({1, 2}), S({1, 3})), 50.0);
  EXPECT_EQ(absolute_accuracy(S({5}), S({1})), 0.0);
  EXPECT_EQ(code_of([] { absolute_accuracy(S({5}), S({1, 2})); }), ErrorCode::kInvalidArgument);
}

TEST(Metrics, InvariantUnderItemPermutation) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_grid(rng, 3 + rng() % 5, 3);
    const double f = fleiss_kappa_nominal(RatingMatrix::from_rows(g)).kappa;
    const double q = mean_pairwise_qwk(RatingMatrix::from_rows(g));
    std::shuffle(g.begin(), g.end(), rng);
    EXPECT_NEAR(fleiss_kappa_nominal(RatingMatrix::from_rows(g)).kappa, f, 1e-12);
    EXPECT_NEAR(mean_pairwise_qwk(RatingMatrix::from_rows(g)), q, 1e-12);
  }
}

// Every complete matrix of up to 4 items x 3 raters over {1,2,3}.
TEST(Oracle, ExhaustiveSmallMatrices) {
  std::size_t checked = 0;
  for (std::size_t items = 1; items <= 4; ++items) {
    const std::size_t cells = items * 3;
    std::size_t total = 1;
    for (std::size_t c = 0; c < cells; ++c) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::vector<int>> g(items, std::vector<int>(3));
      std::size_t x = code;
      for (std::size_t c = 0; c < cells; ++c, x /= 3) g[c / 3][c % 3] = 1 + static_cast<int>(x % 3);
      const RatingMatrix m = RatingMatrix::from_rows(g);
      ASSERT_NEAR(fleiss_kappa_nominal(m).kappa, oracle::fleiss_kappa(g), 1e-9);
      if (items * 3 >= 2) ASSERT_NEAR(krippendorff_alpha(m), oracle::alpha_interval(g), 1e-9);
      const ScoreList a = m.rater_column(0), b = m.rater_column(1);
      std::vector<int> ai, bi;
      for (auto s : a) ai.push_back(s.value());
      for (auto s : b) bi.push_back(s.value());
      ASSERT_NEAR(cohen_qwk(a, b), oracle::qwk(ai, bi), 1e-9);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 27u + 729u + 19683u + 531441u);
}

TEST(RatingMatrix, Basics) {
  const auto m = RatingMatrix::from_rows({{1, 0}, {2, 3}});
  EXPECT_FALSE(m.complete());
  EXPECT_EQ(m.item_ids(), (std::vector<std::string>{"i0", "i1"}));
  EXPECT_EQ(m.rater_ids(), (std::vector<std::string>{"r0", "r1"}));
  EXPECT_EQ(m.item_ratings(0).size(), 1u);
  EXPECT_EQ(code_of([&] { m.rater_column(1); }), ErrorCode::kIncompleteMatrix);
  const std::vector<std::size_t> pick{1};
  EXPECT_TRUE(m.select_items(pick).complete());
  EXPECT_EQ(code_of([] { RatingMatrix::from_rows({{1, 6}}); }), ErrorCode::kInvalidArgument);
}

TEST(Annotations, ParseCsv) {
  const RatingMatrix m = parse_annotations_csv("poem_id,rater_id,score\np2,h1,4\np1,h1,3\np2,h2,5\n");
  EXPECT_EQ(m.item_ids(), (std::vector<std::string>{"p2", "p1"}));
  EXPECT_EQ(m.rater_ids(), (std::vector<std::string>{"h1", "h2"}));
  EXPECT_EQ(m.at(0, 1)->value(), 5);
  EXPECT_FALSE(m.at(1, 1).has_value());
  EXPECT_EQ(parse_annotations_csv(annotations_to_csv(m)).item_ids(), m.item_ids());
}

TEST(Annotations, Errors) {
  EXPECT_EQ(code_of([] { parse_annotations_csv("poem,rater,score\n"); }), ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_annotations_csv("poem_id,rater_id,score\np1,h1,7\n"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_annotations_csv("poem_id,rater_id,score\np1,h1,x\n"); }),
            ErrorCode::kMalformedRecord);
  EXPECT_EQ(code_of([] { parse_annotations_csv("poem_id,rater_id,score\np1,h1,3\np1,h1,4\n"); }),
            ErrorCode::kDuplicateId);
}

}  // namespace
}  // namespace divan
