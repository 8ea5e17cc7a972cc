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

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "core/aggregation.hpp"
#include "core/agreement.hpp"
#include "core/config.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/meterstats.hpp"
#include "core/pipeline.hpp"
#include "core/scorer.hpp"
#include "core/textprep.hpp"

struct divan_corpus {
  std::vector<divan::Poem> poems;
};

struct divan_config {
  divan::RunConfig config;
  divan_log_fn log = nullptr;
  void* log_user = nullptr;
};

struct divan_ds_result {
  divan::DawidSkeneResult result;
};

namespace {

thread_local std::string last_error;

template <typename F>
divan_status guard(F&& fn) noexcept {
  try {
    fn();
    return DIVAN_OK;
  } catch (const divan::Error& e) {
    last_error = e.what();
    return static_cast<divan_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DIVAN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DIVAN_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return DIVAN_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) divan::fail(divan::ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
}

divan::ScoreList scores(const int* values, std::size_t n) {
  if (n) need(values, "scores");
  return divan::to_scores(std::span<const int>(values, n));
}

divan::RatingMatrix matrix(const int* ratings, std::size_t items, std::size_t raters) {
  need(ratings, "ratings");
  std::vector<std::vector<int>> rows(items, std::vector<int>(raters));
  for (std::size_t i = 0; i < items; ++i) {
    for (std::size_t r = 0; r < raters; ++r) rows[i][r] = ratings[i * raters + r];
  }
  return divan::RatingMatrix::from_rows(rows);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

divan::LogFn logger(const divan_config* c) {
  if (!c->log) return {};
  return [fn = c->log, user = c->log_user](const std::string& line) { fn(user, line.c_str()); };
}

}  // namespace

extern "C" {

const char* divan_version(void) { return "0.1.0"; }

const char* divan_status_string(divan_status status) {
  if (status == DIVAN_OK) return "ok";
  static thread_local std::string name;
  name = std::string(divan::error_code_name(static_cast<divan::ErrorCode>(status)));
  return name.c_str();
}

const char* divan_last_error(void) { return last_error.c_str(); }

void divan_string_free(char* s) { std::free(s); }

divan_status divan_build_prompt(const char* poem_text, char** out_prompt) {
  return guard([&] {
    need(poem_text, "poem_text");
    need(out_prompt, "out_prompt");
    *out_prompt = copy_string(divan::build_prompt(poem_text));
  });
}

divan_status divan_parse_score_response(const char* raw, int* out_score) {
  return guard([&] {
    need(raw, "raw");
    need(out_score, "out_score");
    *out_score = divan::parse_score_response(raw).value();
  });
}

divan_status divan_map_categorical_label(const char* label, int* out_score) {
  return guard([&] {
    need(label, "label");
    need(out_score, "out_score");
    *out_score = divan::map_categorical_label(label).value();
  });
}

divan_status divan_combine_chunk_scores(const int* values, size_t n, int* out_score) {
  return guard([&] {
    need(out_score, "out_score");
    *out_score = divan::combine_chunk_scores(scores(values, n)).value();
  });
}

divan_status divan_chunk_document(const char* doc, size_t max_tokens, size_t* offsets, size_t* lengths,
                                  size_t* token_counts, size_t capacity, size_t* out_count) {
  return guard([&] {
    need(doc, "doc");
    need(out_count, "out_count");
    const std::string_view text(doc);
    const divan::ChunkSet set = divan::chunk_document(text, max_tokens, divan::whitespace_tokenizer());
    *out_count = set.chunks.size();
    if (set.chunks.size() > capacity) {
      divan::fail(divan::ErrorCode::kInsufficientData,
                  "chunk arrays hold " + std::to_string(capacity) + " entries, need " + std::to_string(set.chunks.size()));
    }
    std::size_t pos = 0;
    for (std::size_t i = 0; i < set.chunks.size(); ++i) {
      if (offsets) offsets[i] = pos;
      if (lengths) lengths[i] = set.chunks[i].size();
      if (token_counts) token_counts[i] = set.token_counts[i];
      pos += set.chunks[i].size();
    }
  });
}

divan_status divan_fleiss_kappa(const int* ratings, size_t items, size_t raters, double* out_kappa, int* out_all_agree) {
  return guard([&] {
    need(out_kappa, "out_kappa");
    const divan::FleissResult r = divan::fleiss_kappa_nominal(matrix(ratings, items, raters));
    *out_kappa = r.kappa;
    if (out_all_agree) *out_all_agree = r.all_agree ? 1 : 0;
  });
}

divan_status divan_krippendorff_alpha(const int* ratings, size_t items, size_t raters, divan_difference difference,
                                      double* out_alpha) {
  return guard([&] {
    need(out_alpha, "out_alpha");
    const auto d = difference == DIVAN_DIFFERENCE_ORDINAL ? divan::Difference::kOrdinal : divan::Difference::kInterval;
    *out_alpha = divan::krippendorff_alpha(matrix(ratings, items, raters), d);
  });
}

divan_status divan_cohen_qwk(const int* a, const int* b, size_t n, double* out_kappa) {
  return guard([&] {
    need(out_kappa, "out_kappa");
    *out_kappa = divan::cohen_qwk(scores(a, n), scores(b, n));
  });
}

divan_status divan_avg_qwk(const int* candidate, const int* annotators, size_t n_annotators, size_t n, double* out_avg) {
  return guard([&] {
    need(out_avg, "out_avg");
    need(annotators, "annotators");
    std::vector<divan::ScoreList> lists;
    for (std::size_t k = 0; k < n_annotators; ++k) lists.push_back(scores(annotators + k * n, n));
    *out_avg = divan::avg_qwk_vs_annotators(scores(candidate, n), lists);
  });
}

divan_status divan_absolute_accuracy(const int* predicted, const int* truth, size_t n, double* out_pct) {
  return guard([&] {
    need(out_pct, "out_pct");
    *out_pct = divan::absolute_accuracy(scores(predicted, n), scores(truth, n));
  });
}

divan_status divan_aggregate(divan_aggregation method, const int* ratings, size_t n, int* out_score) {
  return guard([&] {
    need(out_score, "out_score");
    const divan::ScoreList list = scores(ratings, n);
    switch (method) {
      case DIVAN_AGGREGATE_MEAN: *out_score = divan::aggregate_mean(list).value(); break;
      case DIVAN_AGGREGATE_MEDIAN: *out_score = divan::aggregate_median(list).value(); break;
      case DIVAN_AGGREGATE_MODE: *out_score = divan::aggregate_mode(list).value(); break;
      default:
        divan::fail(divan::ErrorCode::kInvalidArgument, "per-item aggregation supports mean, median and mode");
    }
  });
}

divan_status divan_dawid_skene(const int* ratings, size_t items, size_t raters, double tol, int max_iter,
                               divan_ds_result** out) {
  return guard([&] {
    need(out, "out");
    divan::DawidSkeneOptions options;
    options.tol = tol;
    options.max_iter = max_iter;
    *out = new divan_ds_result{divan::dawid_skene(matrix(ratings, items, raters), options)};
  });
}

void divan_ds_result_free(divan_ds_result* result) { delete result; }

divan_status divan_ds_labels(const divan_ds_result* result, int* labels, size_t items) {
  return guard([&] {
    need(result, "result");
    need(labels, "labels");
    if (items != result->result.labels.size()) divan::fail(divan::ErrorCode::kInvalidArgument, "label buffer size mismatch");
    for (std::size_t i = 0; i < items; ++i) labels[i] = result->result.labels[i].value();
  });
}

int divan_ds_iterations(const divan_ds_result* result) { return result ? result->result.iterations : 0; }

int divan_ds_converged(const divan_ds_result* result) { return result && result->result.converged ? 1 : 0; }

divan_status divan_ds_priors(const divan_ds_result* result, double* priors) {
  return guard([&] {
    need(result, "result");
    need(priors, "priors");
    std::copy(result->result.priors.begin(), result->result.priors.end(), priors);
  });
}

divan_status divan_ds_confusion(const divan_ds_result* result, size_t rater, double* confusion) {
  return guard([&] {
    need(result, "result");
    need(confusion, "confusion");
    const auto& m = result->result.confusions.at(rater).matrix;
    for (std::size_t t = 0; t < m.size(); ++t) {
      for (std::size_t r = 0; r < m[t].size(); ++r) confusion[t * m.size() + r] = m[t][r];
    }
  });
}

size_t divan_ds_log_likelihood_count(const divan_ds_result* result) {
  return result ? result->result.log_likelihood.size() : 0;
}

double divan_ds_log_likelihood_at(const divan_ds_result* result, size_t iteration) {
  if (!result || iteration >= result->result.log_likelihood.size()) return 0.0;
  return result->result.log_likelihood[iteration];
}

divan_status divan_select_ground_truth(const int* ratings, size_t items, size_t raters, divan_aggregation* out_method,
                                       int* labels, double* out_avg_qwk) {
  return guard([&] {
    const divan::GroundTruthSelection sel = divan::select_ground_truth(matrix(ratings, items, raters));
    const divan::GroundTruth& w = sel.winner();
    if (out_method) *out_method = static_cast<divan_aggregation>(sel.selected);
    if (labels) {
      for (std::size_t i = 0; i < w.labels.size(); ++i) labels[i] = w.labels[i].value();
    }
    if (out_avg_qwk) *out_avg_qwk = w.selection_score;
  });
}

divan_status divan_entropy(const double* p, double* out_bits) {
  return guard([&] {
    need(p, "p");
    need(out_bits, "out_bits");
    std::array<double, divan::SentimentScore::kLevels> probs{};
    std::copy(p, p + probs.size(), probs.begin());
    *out_bits = divan::entropy(divan::SentimentDistribution(probs));
  });
}

divan_status divan_meter_summary(const int* values, size_t n, int has_reference, double reference_mean,
                                 divan_meter_stats* out) {
  return guard([&] {
    need(out, "out");
    const divan::ScoreList list = scores(values, n);
    const divan::MeterStats s =
        divan::summarize("", list, has_reference ? std::optional<double>(reference_mean) : std::nullopt);
    *out = divan_meter_stats{s.n_poems, s.mean_sentiment, s.std_dev, s.entropy_bits,
                             s.happy_fraction, s.polarized_fraction, s.neutral_fraction};
  });
}

divan_status divan_corpus_load(const char* path, divan_corpus** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new divan_corpus{divan::load_corpus(path)};
  });
}

void divan_corpus_free(divan_corpus* corpus) { delete corpus; }

size_t divan_corpus_size(const divan_corpus* corpus) { return corpus ? corpus->poems.size() : 0; }

const char* divan_corpus_poem_id(const divan_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->poems.size()) return nullptr;
  return corpus->poems[index].id.c_str();
}

const char* divan_corpus_meter_code(const divan_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->poems.size() || !corpus->poems[index].meter_code) return nullptr;
  return corpus->poems[index].meter_code->c_str();
}

divan_status divan_corpus_assign_meters(divan_corpus* corpus, const char* registry_path, size_t* out_unmatched) {
  return guard([&] {
    need(corpus, "corpus");
    need(registry_path, "registry_path");
    divan::MeterAssignment a = divan::assign_meter_codes(corpus->poems, divan::load_meter_registry(registry_path));
    corpus->poems = std::move(a.poems);
    if (out_unmatched) *out_unmatched = a.unmatched.size();
  });
}

divan_status divan_corpus_count_meter_groups(const divan_corpus* corpus, size_t min_count, size_t* out_groups) {
  return guard([&] {
    need(corpus, "corpus");
    need(out_groups, "out_groups");
    *out_groups = divan::group_by_meter(corpus->poems, min_count).size();
  });
}

divan_status divan_config_create(divan_config** out) {
  return guard([&] {
    need(out, "out");
    *out = new divan_config;
  });
}

void divan_config_free(divan_config* config) { delete config; }

divan_status divan_config_set(divan_config* config, const char* key, const char* value) {
  return guard([&] {
    need(config, "config");
    need(key, "key");
    need(value, "value");
    config->config.set(key, value);
  });
}

divan_status divan_config_load_file(divan_config* config, const char* path) {
  return guard([&] {
    need(config, "config");
    need(path, "path");
    config->config.load_file(path);
  });
}

void divan_config_clear_scorers(divan_config* config) {
  if (config) config->config.scorers.clear();
}

void divan_config_set_logger(divan_config* config, divan_log_fn fn, void* user_data) {
  if (!config) return;
  config->log = fn;
  config->log_user = user_data;
}

divan_status divan_run_analyze(const divan_config* config) {
  return guard([&] {
    need(config, "config");
    divan::run_analyze(config->config, logger(config));
  });
}

divan_status divan_run_ground_truth(const divan_config* config) {
  return guard([&] {
    need(config, "config");
    divan::run_ground_truth(config->config, logger(config));
  });
}

divan_status divan_run_benchmark(const divan_config* config) {
  return guard([&] {
    need(config, "config");
    divan::run_benchmark(config->config, logger(config));
  });
}

divan_status divan_run_agree(const divan_config* config) {
  return guard([&] {
    need(config, "config");
    divan::run_agree(config->config, logger(config));
  });
}

divan_status divan_run_synth(const divan_config* config) {
  return guard([&] {
    need(config, "config");
    divan::run_synth(config->config, logger(config));
  });
}

}  // extern "C"
