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

#ifndef DIVAN_DIVAN_H_
#define DIVAN_DIVAN_H_

/*
 * C interface to the divan sentiment-statistics library.
 *
 * Every fallible call returns a divan_status. On failure the message for the
 * calling thread is available from divan_last_error() until the next failing
 * call on that thread. Handles are opaque and owned by the caller; release
 * them with the matching *_free function. Strings returned through char**
 * out-parameters are heap copies released with divan_string_free().
 *
 * Scores are plain ints on the 1..5 scale. Rating grids are row-major
 * (items x raters) and use 0 for a missing cell.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DIVAN_BUILDING_LIBRARY)
#    define DIVAN_API __declspec(dllexport)
#  else
#    define DIVAN_API __declspec(dllimport)
#  endif
#else
#  define DIVAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum divan_status {
  DIVAN_OK = 0,
  DIVAN_ERR_INVALID_ARGUMENT = 1,
  DIVAN_ERR_IO = 2,
  DIVAN_ERR_MALFORMED_RECORD = 3,
  DIVAN_ERR_DUPLICATE_ID = 4,
  DIVAN_ERR_EMPTY_VERSES = 5,
  DIVAN_ERR_UNPARSEABLE_RESPONSE = 6,
  DIVAN_ERR_UNKNOWN_LABEL = 7,
  DIVAN_ERR_TRANSPORT = 8,
  DIVAN_ERR_REPLAY_MISS = 9,
  DIVAN_ERR_INCOMPLETE_MATRIX = 10,
  DIVAN_ERR_DEGENERATE_INPUT = 11,
  DIVAN_ERR_INSUFFICIENT_DATA = 12,
  DIVAN_ERR_COVERAGE_MISMATCH = 13,
  DIVAN_ERR_CONFIG = 14,
  DIVAN_ERR_INTERNAL = 15
} divan_status;

typedef enum divan_difference {
  DIVAN_DIFFERENCE_INTERVAL = 0,
  DIVAN_DIFFERENCE_ORDINAL = 1
} divan_difference;

typedef enum divan_aggregation {
  DIVAN_AGGREGATE_MEAN = 0,
  DIVAN_AGGREGATE_MEDIAN = 1,
  DIVAN_AGGREGATE_MODE = 2,
  DIVAN_AGGREGATE_DAWID_SKENE = 3
} divan_aggregation;

DIVAN_API const char* divan_version(void);
DIVAN_API const char* divan_status_string(divan_status status);
DIVAN_API const char* divan_last_error(void);
DIVAN_API void divan_string_free(char* s);

/* ---- text preparation and scoring contracts ---------------------------- */

DIVAN_API divan_status divan_build_prompt(const char* poem_text, char** out_prompt);
DIVAN_API divan_status divan_parse_score_response(const char* raw, int* out_score);
DIVAN_API divan_status divan_map_categorical_label(const char* label, int* out_score);
DIVAN_API divan_status divan_combine_chunk_scores(const int* scores, size_t n, int* out_score);

/* Splits `doc` with the whitespace tokenizer. Chunk i occupies
 * [offsets[i], offsets[i] + lengths[i]) in doc. Arrays hold `capacity`
 * entries; *out_count receives the chunk count even when it exceeds
 * capacity (then DIVAN_ERR_INSUFFICIENT_DATA is returned). */
DIVAN_API divan_status divan_chunk_document(const char* doc, size_t max_tokens, size_t* offsets, size_t* lengths,
                                            size_t* token_counts, size_t capacity, size_t* out_count);

/* ---- agreement metrics -------------------------------------------------- */

DIVAN_API divan_status divan_fleiss_kappa(const int* ratings, size_t items, size_t raters, double* out_kappa,
                                          int* out_all_agree);
DIVAN_API divan_status divan_krippendorff_alpha(const int* ratings, size_t items, size_t raters,
                                                divan_difference difference, double* out_alpha);
DIVAN_API divan_status divan_cohen_qwk(const int* a, const int* b, size_t n, double* out_kappa);
DIVAN_API divan_status divan_avg_qwk(const int* candidate, const int* annotators, size_t n_annotators, size_t n,
                                     double* out_avg);
DIVAN_API divan_status divan_absolute_accuracy(const int* predicted, const int* truth, size_t n, double* out_pct);

/* ---- aggregation -------------------------------------------------------- */

/* Mean, median or mode of one item's ratings. */
DIVAN_API divan_status divan_aggregate(divan_aggregation method, const int* ratings, size_t n, int* out_score);

typedef struct divan_ds_result divan_ds_result;

DIVAN_API divan_status divan_dawid_skene(const int* ratings, size_t items, size_t raters, double tol, int max_iter,
                                         divan_ds_result** out);
DIVAN_API void divan_ds_result_free(divan_ds_result* result);
/* labels must hold `items` ints. */
DIVAN_API divan_status divan_ds_labels(const divan_ds_result* result, int* labels, size_t items);
DIVAN_API int divan_ds_iterations(const divan_ds_result* result);
DIVAN_API int divan_ds_converged(const divan_ds_result* result);
/* priors must hold 5 doubles; confusion 25 doubles (row = true score). */
DIVAN_API divan_status divan_ds_priors(const divan_ds_result* result, double* priors);
DIVAN_API divan_status divan_ds_confusion(const divan_ds_result* result, size_t rater, double* confusion);
DIVAN_API size_t divan_ds_log_likelihood_count(const divan_ds_result* result);
DIVAN_API double divan_ds_log_likelihood_at(const divan_ds_result* result, size_t iteration);

/* Runs all four aggregators and returns the winning method, its labels
 * (`items` ints) and its average QWK against the annotators. */
DIVAN_API divan_status divan_select_ground_truth(const int* ratings, size_t items, size_t raters,
                                                 divan_aggregation* out_method, int* labels, double* out_avg_qwk);

/* ---- meter statistics --------------------------------------------------- */

typedef struct divan_meter_stats {
  size_t n_poems;
  double mean_sentiment;
  double std_dev;
  double entropy_bits;
  double happy_fraction;
  double polarized_fraction;
  double neutral_fraction;
} divan_meter_stats;

/* p holds 5 probabilities for scores 1..5. */
DIVAN_API divan_status divan_entropy(const double* p, double* out_bits);
/* reference_mean is used when has_reference is non-zero. */
DIVAN_API divan_status divan_meter_summary(const int* scores, size_t n, int has_reference, double reference_mean,
                                           divan_meter_stats* out);

/* ---- corpus ------------------------------------------------------------- */

typedef struct divan_corpus divan_corpus;

DIVAN_API divan_status divan_corpus_load(const char* path, divan_corpus** out);
DIVAN_API void divan_corpus_free(divan_corpus* corpus);
DIVAN_API size_t divan_corpus_size(const divan_corpus* corpus);
/* Borrowed pointers valid until the corpus is modified or freed. meter_code
 * returns NULL for uncoded poems. */
DIVAN_API const char* divan_corpus_poem_id(const divan_corpus* corpus, size_t index);
DIVAN_API const char* divan_corpus_meter_code(const divan_corpus* corpus, size_t index);
DIVAN_API divan_status divan_corpus_assign_meters(divan_corpus* corpus, const char* registry_path,
                                                  size_t* out_unmatched);
/* Number of meter groups holding at least min_count coded poems. */
DIVAN_API divan_status divan_corpus_count_meter_groups(const divan_corpus* corpus, size_t min_count,
                                                       size_t* out_groups);

/* ---- pipeline ----------------------------------------------------------- */

typedef struct divan_config divan_config;
typedef void (*divan_log_fn)(void* user_data, const char* line);

DIVAN_API divan_status divan_config_create(divan_config** out);
DIVAN_API void divan_config_free(divan_config* config);
/* Keys match the CLI flag names without dashes prefix (runs, min-poems,
 * scorer, ...). `scorer` may be set repeatedly and appends. */
DIVAN_API divan_status divan_config_set(divan_config* config, const char* key, const char* value);
DIVAN_API divan_status divan_config_load_file(divan_config* config, const char* path);
/* Drops every scorer spec set so far. */
DIVAN_API void divan_config_clear_scorers(divan_config* config);
DIVAN_API void divan_config_set_logger(divan_config* config, divan_log_fn fn, void* user_data);

DIVAN_API divan_status divan_run_analyze(const divan_config* config);
DIVAN_API divan_status divan_run_ground_truth(const divan_config* config);
DIVAN_API divan_status divan_run_benchmark(const divan_config* config);
DIVAN_API divan_status divan_run_agree(const divan_config* config);
DIVAN_API divan_status divan_run_synth(const divan_config* config);

#ifdef __cplusplus
}
#endif

#endif /* DIVAN_DIVAN_H_ */
