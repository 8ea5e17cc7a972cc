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

#include "divan/divan.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
const std::string kData = DIVAN_TEST_DATA;

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STREQ(divan_version(), "0.1.0");
  EXPECT_STREQ(divan_status_string(DIVAN_OK), "ok");
  EXPECT_STRNE(divan_status_string(DIVAN_ERR_REPLAY_MISS), "");
}

TEST(CApi, PromptAndParsing) {
  char* prompt = nullptr;
  ASSERT_EQ(divan_build_prompt("X", &prompt), DIVAN_OK);
  const std::string p(prompt);
  divan_string_free(prompt);
  EXPECT_EQ(p.substr(0, 40), "Analyze the sentiment of the following p");
  EXPECT_EQ(p.substr(p.size() - 2), "\nX");
  EXPECT_EQ(divan_build_prompt("", &prompt), DIVAN_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(divan_last_error()).find("empty"), std::string::npos);

  int s = 0;
  EXPECT_EQ(divan_parse_score_response("Sentiment: 2.", &s), DIVAN_OK);
  EXPECT_EQ(s, 2);
  EXPECT_EQ(divan_parse_score_response("happy", &s), DIVAN_ERR_UNPARSEABLE_RESPONSE);
  EXPECT_EQ(divan_map_categorical_label("positive", &s), DIVAN_OK);
  EXPECT_EQ(s, 5);
  EXPECT_EQ(divan_map_categorical_label("mixed", &s), DIVAN_ERR_UNKNOWN_LABEL);
  const int chunks[] = {5, 4};
  EXPECT_EQ(divan_combine_chunk_scores(chunks, 2, &s), DIVAN_OK);
  EXPECT_EQ(s, 5);
  EXPECT_EQ(divan_combine_chunk_scores(chunks, 0, &s), DIVAN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(divan_parse_score_response(nullptr, &s), DIVAN_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Chunking) {
  std::string doc;
  for (int i = 0; i < 1000; ++i) doc += "w ";
  std::vector<size_t> off(4), len(4), tok(4);
  size_t n = 0;
  ASSERT_EQ(divan_chunk_document(doc.c_str(), 512, off.data(), len.data(), tok.data(), 4, &n), DIVAN_OK);
  ASSERT_EQ(n, 2u);
  EXPECT_EQ(tok[0], 512u);
  EXPECT_EQ(tok[1], 488u);
  EXPECT_EQ(off[1], len[0]);
  EXPECT_EQ(len[0] + len[1], doc.size());
  EXPECT_EQ(divan_chunk_document(doc.c_str(), 10, off.data(), len.data(), tok.data(), 4, &n),
            DIVAN_ERR_INSUFFICIENT_DATA);
  EXPECT_EQ(n, 100u);
}

TEST(CApi, AgreementGoldenValues) {
  const int fleiss[] = {1, 1, 2, 1, 2, 2, 1, 1, 2};
  double k = 0;
  int all_agree = -1;
  ASSERT_EQ(divan_fleiss_kappa(fleiss, 3, 3, &k, &all_agree), DIVAN_OK);
  EXPECT_NEAR(k, -0.35, 1e-9);
  EXPECT_EQ(all_agree, 0);

  const int alpha[] = {1, 5, 5, 1};
  double a = 0;
  ASSERT_EQ(divan_krippendorff_alpha(alpha, 2, 2, DIVAN_DIFFERENCE_INTERVAL, &a), DIVAN_OK);
  EXPECT_NEAR(a, -0.5, 1e-9);

  const int up[] = {1, 2, 3, 4, 5}, down[] = {5, 4, 3, 2, 1};
  double q = 0;
  ASSERT_EQ(divan_cohen_qwk(up, down, 5, &q), DIVAN_OK);
  EXPECT_NEAR(q, -1.0, 1e-9);
  const int both[] = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
  ASSERT_EQ(divan_avg_qwk(up, both, 2, 5, &q), DIVAN_OK);
  EXPECT_NEAR(q, 0.0, 1e-12);
  double pct = 0;
  const int p1[] = {1, 2}, t1[] = {1, 3};
  ASSERT_EQ(divan_absolute_accuracy(p1, t1, 2, &pct), DIVAN_OK);
  EXPECT_EQ(pct, 50.0);

  const int gap[] = {1, 0, 2, 2};
  EXPECT_EQ(divan_fleiss_kappa(gap, 2, 2, &k, nullptr), DIVAN_ERR_INCOMPLETE_MATRIX);
  const int bad[] = {1, 9};
  EXPECT_EQ(divan_cohen_qwk(bad, up, 2, &q), DIVAN_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Aggregation) {
  int out = 0;
  const int r[] = {1, 1, 5, 5};
  ASSERT_EQ(divan_aggregate(DIVAN_AGGREGATE_MEAN, r, 4, &out), DIVAN_OK);
  EXPECT_EQ(out, 3);
  ASSERT_EQ(divan_aggregate(DIVAN_AGGREGATE_MEDIAN, r, 4, &out), DIVAN_OK);
  EXPECT_EQ(out, 3);
  ASSERT_EQ(divan_aggregate(DIVAN_AGGREGATE_MODE, r, 4, &out), DIVAN_OK);
  EXPECT_EQ(out, 1);
  EXPECT_EQ(divan_aggregate(DIVAN_AGGREGATE_DAWID_SKENE, r, 4, &out), DIVAN_ERR_INVALID_ARGUMENT);

  const int grid[] = {1, 1, 1, 3, 3, 3, 5, 5, 5, 2, 2, 2};
  divan_ds_result* ds = nullptr;
  ASSERT_EQ(divan_dawid_skene(grid, 4, 3, 1e-6, 500, &ds), DIVAN_OK);
  int labels[4] = {};
  ASSERT_EQ(divan_ds_labels(ds, labels, 4), DIVAN_OK);
  EXPECT_EQ(std::vector<int>(labels, labels + 4), (std::vector<int>{1, 3, 5, 2}));
  EXPECT_EQ(divan_ds_converged(ds), 1);
  EXPECT_GE(divan_ds_iterations(ds), 1);
  double priors[5], conf[25];
  ASSERT_EQ(divan_ds_priors(ds, priors), DIVAN_OK);
  EXPECT_NEAR(priors[0] + priors[1] + priors[2] + priors[3] + priors[4], 1.0, 1e-9);
  ASSERT_EQ(divan_ds_confusion(ds, 0, conf), DIVAN_OK);
  EXPECT_NEAR(conf[0], 1.0, 1e-6);
  EXPECT_EQ(divan_ds_confusion(ds, 7, conf), DIVAN_ERR_INTERNAL);
  const size_t n = divan_ds_log_likelihood_count(ds);
  ASSERT_GE(n, 1u);
  for (size_t i = 1; i < n; ++i) EXPECT_GE(divan_ds_log_likelihood_at(ds, i), divan_ds_log_likelihood_at(ds, i - 1) - 1e-9);
  divan_ds_result_free(ds);

  divan_aggregation method = DIVAN_AGGREGATE_DAWID_SKENE;
  double avg = 0;
  ASSERT_EQ(divan_select_ground_truth(grid, 4, 3, &method, labels, &avg), DIVAN_OK);
  EXPECT_EQ(method, DIVAN_AGGREGATE_MEAN);
  EXPECT_EQ(avg, 1.0);
}

TEST(CApi, MeterStatistics) {
  const double uniform[] = {0.2, 0.2, 0.2, 0.2, 0.2};
  double h = 0;
  ASSERT_EQ(divan_entropy(uniform, &h), DIVAN_OK);
  EXPECT_NEAR(h, std::log2(5.0), 1e-12);
  const double bad[] = {0.5, 0.5, 0.5, 0, 0};
  EXPECT_EQ(divan_entropy(bad, &h), DIVAN_ERR_INVALID_ARGUMENT);

  const int scores[] = {3, 3, 1, 5};
  divan_meter_stats st{};
  ASSERT_EQ(divan_meter_summary(scores, 4, 0, 0.0, &st), DIVAN_OK);
  EXPECT_EQ(st.n_poems, 4u);
  EXPECT_EQ(st.mean_sentiment, 3.0);
  EXPECT_EQ(st.polarized_fraction, 0.5);
  EXPECT_EQ(st.neutral_fraction, 0.5);
  EXPECT_EQ(st.happy_fraction, 0.25);
  EXPECT_EQ(st.entropy_bits, 1.5);
  ASSERT_EQ(divan_meter_summary(scores, 4, 1, 2.0, &st), DIVAN_OK);
  EXPECT_NEAR(st.std_dev, std::sqrt((1.0 + 1.0 + 1.0 + 9.0) / 4.0), 1e-12);
}

TEST(CApi, Corpus) {
  divan_corpus* c = nullptr;
  ASSERT_EQ(divan_corpus_load((kData + "/corpus.jsonl").c_str(), &c), DIVAN_OK);
  EXPECT_EQ(divan_corpus_size(c), 25u);
  EXPECT_STREQ(divan_corpus_poem_id(c, 0), "rumi-001");
  EXPECT_EQ(divan_corpus_meter_code(c, 0), nullptr);
  EXPECT_EQ(divan_corpus_poem_id(c, 99), nullptr);
  size_t unmatched = 99;
  ASSERT_EQ(divan_corpus_assign_meters(c, (kData + "/registry.jsonl").c_str(), &unmatched), DIVAN_OK);
  EXPECT_EQ(unmatched, 0u);
  EXPECT_STREQ(divan_corpus_meter_code(c, 0), "R24");
  size_t groups = 0;
  ASSERT_EQ(divan_corpus_count_meter_groups(c, 0, &groups), DIVAN_OK);
  EXPECT_EQ(groups, 7u);
  ASSERT_EQ(divan_corpus_count_meter_groups(c, 15, &groups), DIVAN_OK);
  EXPECT_EQ(groups, 0u);
  divan_corpus_free(c);
  EXPECT_EQ(divan_corpus_load("/nonexistent.jsonl", &c), DIVAN_ERR_IO);
}

void collect(void* user, const char* line) { static_cast<std::vector<std::string>*>(user)->push_back(line); }

TEST(CApi, PipelineRuns) {
  const fs::path out = fs::temp_directory_path() / "divan_capi_pipeline";
  fs::remove_all(out);
  divan_config* cfg = nullptr;
  ASSERT_EQ(divan_config_create(&cfg), DIVAN_OK);
  std::vector<std::string> lines;
  divan_config_set_logger(cfg, collect, &lines);
  EXPECT_EQ(divan_config_set(cfg, "bogus", "1"), DIVAN_ERR_CONFIG);
  ASSERT_EQ(divan_config_set(cfg, "corpus", (kData + "/corpus.jsonl").c_str()), DIVAN_OK);
  ASSERT_EQ(divan_config_set(cfg, "registry", (kData + "/registry.jsonl").c_str()), DIVAN_OK);
  ASSERT_EQ(divan_config_set(cfg, "scorer", "kind=constant,value=4"), DIVAN_OK);
  ASSERT_EQ(divan_config_set(cfg, "min-poems", "3"), DIVAN_OK);
  ASSERT_EQ(divan_config_set(cfg, "out", out.c_str()), DIVAN_OK);
  ASSERT_EQ(divan_run_analyze(cfg), DIVAN_OK) << divan_last_error();
  EXPECT_TRUE(fs::exists(out / "reliability.csv"));
  EXPECT_FALSE(lines.empty());

  divan_config_clear_scorers(cfg);
  EXPECT_EQ(divan_run_analyze(cfg), DIVAN_ERR_CONFIG);

  ASSERT_EQ(divan_config_set(cfg, "scenario", "unanimous"), DIVAN_OK);
  ASSERT_EQ(divan_run_synth(cfg), DIVAN_OK) << divan_last_error();
  ASSERT_EQ(divan_config_set(cfg, "annotations", (out / "annotations.csv").c_str()), DIVAN_OK);
  ASSERT_EQ(divan_run_ground_truth(cfg), DIVAN_OK) << divan_last_error();
  ASSERT_EQ(divan_run_agree(cfg), DIVAN_OK) << divan_last_error();
  EXPECT_EQ(divan_run_benchmark(cfg), DIVAN_ERR_CONFIG);  // no ground truth configured
  divan_config_free(cfg);
  EXPECT_EQ(divan_run_analyze(nullptr), DIVAN_ERR_INVALID_ARGUMENT);
}

}  // namespace
