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

#include "core/aggregation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/error.hpp"
#include "core/report.hpp"

namespace divan {

namespace {

constexpr std::size_t K = SentimentScore::kLevels;

void require_non_empty(std::span<const SentimentScore> ratings, const char* what) {
  if (ratings.empty()) fail(ErrorCode::kInvalidArgument, std::string(what) + " of an empty rating list");
}

}  // namespace

std::string_view aggregation_method_name(AggregationMethod method) {
  switch (method) {
    case AggregationMethod::kMean: return "mean";
    case AggregationMethod::kMedian: return "median";
    case AggregationMethod::kMode: return "mode";
    case AggregationMethod::kDawidSkene: return "dawid-skene";
  }
  return "unknown";
}

AggregationMethod parse_aggregation_method(std::string_view name) {
  for (auto m : kAggregationMethods) {
    if (aggregation_method_name(m) == name) return m;
  }
  fail(ErrorCode::kMalformedRecord, "unknown aggregation method '" + std::string(name) + "'");
}

SentimentScore aggregate_mean(std::span<const SentimentScore> ratings) {
  require_non_empty(ratings, "mean");
  return round_to_score(mean_of(ratings));
}

SentimentScore aggregate_median(std::span<const SentimentScore> ratings) {
  require_non_empty(ratings, "median");
  ScoreList sorted(ratings.begin(), ratings.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return round_to_score((sorted[n / 2 - 1].value() + sorted[n / 2].value()) / 2.0);
}

SentimentScore aggregate_mode(std::span<const SentimentScore> ratings) {
  require_non_empty(ratings, "mode");
  std::array<std::size_t, K> counts{};
  for (auto s : ratings) ++counts[s.index()];
  const std::size_t best = *std::max_element(counts.begin(), counts.end());
  const double mean = mean_of(ratings);
  std::size_t pick = K;
  double pick_distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < K; ++k) {
    if (counts[k] != best) continue;
    const double d = std::fabs(static_cast<double>(k + SentimentScore::kMin) - mean);
    if (d < pick_distance) {
      pick = k;
      pick_distance = d;
    }
  }
  return SentimentScore(static_cast<int>(pick) + SentimentScore::kMin);
}

DawidSkeneResult dawid_skene(const RatingMatrix& m, const DawidSkeneOptions& options) {
  if (!(options.tol > 0.0)) fail(ErrorCode::kInvalidArgument, "Dawid-Skene tol must be positive");
  if (options.max_iter < 1) fail(ErrorCode::kInvalidArgument, "Dawid-Skene max_iter must be >= 1");
  if (options.smoothing < 0.0) fail(ErrorCode::kInvalidArgument, "Dawid-Skene smoothing must be non-negative");
  const std::size_t N = m.items(), R = m.raters();
  if (N == 0 || R == 0) fail(ErrorCode::kDegenerateInput, "Dawid-Skene needs a non-empty rating matrix");
  for (std::size_t i = 0; i < N; ++i) {
    if (m.item_ratings(i).empty()) {
      fail(ErrorCode::kDegenerateInput, "item '" + m.item_ids()[i] + "' has no ratings");
    }
  }

  using Row = std::array<double, K>;
  std::vector<Row> posterior(N);
  for (std::size_t i = 0; i < N; ++i) {
    const ScoreList votes = m.item_ratings(i);
    for (auto v : votes) posterior[i][v.index()] += 1.0 / static_cast<double>(votes.size());
  }

  const double eps = options.smoothing;
  DawidSkeneResult result;
  result.confusions.resize(R);
  for (std::size_t r = 0; r < R; ++r) result.confusions[r].rater_id = m.rater_ids()[r];

  std::vector<Row> next(N);
  for (int iter = 1; iter <= options.max_iter; ++iter) {
    // M-step.
    Row prior_mass{};
    for (const Row& t : posterior) {
      for (std::size_t k = 0; k < K; ++k) prior_mass[k] += t[k];
    }
    for (std::size_t k = 0; k < K; ++k) {
      result.priors[k] = (prior_mass[k] + eps) / (static_cast<double>(N) + K * eps);
    }
    for (std::size_t r = 0; r < R; ++r) {
      ConfusionMatrix mass{};
      for (std::size_t i = 0; i < N; ++i) {
        if (const auto& v = m.at(i, r)) {
          for (std::size_t k = 0; k < K; ++k) mass[k][v->index()] += posterior[i][k];
        }
      }
      for (std::size_t k = 0; k < K; ++k) {
        double row_total = 0.0;
        for (double x : mass[k]) row_total += x;
        for (std::size_t l = 0; l < K; ++l) {
          const double denom = row_total + K * eps;
          result.confusions[r].matrix[k][l] = denom > 0.0 ? (mass[k][l] + eps) / denom : 1.0 / K;
        }
      }
    }

    // E-step.
    double log_likelihood = 0.0;
    double max_change = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      Row log_post;
      for (std::size_t k = 0; k < K; ++k) {
        double lp = std::log(result.priors[k]);
        for (std::size_t r = 0; r < R; ++r) {
          if (const auto& v = m.at(i, r)) lp += std::log(result.confusions[r].matrix[k][v->index()]);
        }
        log_post[k] = lp;
      }
      const double peak = *std::max_element(log_post.begin(), log_post.end());
      double total = 0.0;
      for (std::size_t k = 0; k < K; ++k) {
        next[i][k] = std::exp(log_post[k] - peak);
        total += next[i][k];
      }
      log_likelihood += peak + std::log(total);
      for (std::size_t k = 0; k < K; ++k) {
        next[i][k] /= total;
        max_change = std::max(max_change, std::fabs(next[i][k] - posterior[i][k]));
      }
    }
    posterior.swap(next);
    result.log_likelihood.push_back(log_likelihood);
    result.iterations = iter;
    if (max_change < options.tol) {
      result.converged = true;
      break;
    }
  }

  result.posteriors = posterior;
  result.labels.reserve(N);
  for (const Row& t : posterior) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < K; ++k) {
      if (t[k] > t[best]) best = k;
    }
    result.labels.emplace_back(static_cast<int>(best) + SentimentScore::kMin);
  }
  return result;
}

GroundTruthSelection select_ground_truth(const RatingMatrix& m, const DawidSkeneOptions& options) {
  if (m.items() < 1) fail(ErrorCode::kInvalidArgument, "ground truth needs at least one item");
  if (m.raters() < 1) fail(ErrorCode::kInvalidArgument, "ground truth needs at least one annotator");
  if (!m.complete()) fail(ErrorCode::kIncompleteMatrix, "ground-truth selection requires a complete rating matrix");

  std::vector<ScoreList> annotators;
  for (std::size_t r = 0; r < m.raters(); ++r) annotators.push_back(m.rater_column(r));

  GroundTruthSelection selection;
  selection.dawid_skene = dawid_skene(m, options);
  for (AggregationMethod method : kAggregationMethods) {
    GroundTruth truth;
    truth.method = method;
    truth.item_ids = m.item_ids();
    if (method == AggregationMethod::kDawidSkene) {
      truth.labels = selection.dawid_skene.labels;
    } else {
      for (std::size_t i = 0; i < m.items(); ++i) {
        const ScoreList ratings = m.item_ratings(i);
        switch (method) {
          case AggregationMethod::kMean: truth.labels.push_back(aggregate_mean(ratings)); break;
          case AggregationMethod::kMedian: truth.labels.push_back(aggregate_median(ratings)); break;
          default: truth.labels.push_back(aggregate_mode(ratings)); break;
        }
      }
    }
    truth.selection_score = avg_qwk_vs_annotators(truth.labels, annotators);
    selection.candidates.push_back(std::move(truth));
  }
  for (std::size_t k = 1; k < selection.candidates.size(); ++k) {
    if (selection.candidates[k].selection_score > selection.candidates[selection.selected].selection_score) {
      selection.selected = k;
    }
  }
  return selection;
}

std::string ground_truth_to_csv(const GroundTruth& truth) {
  CsvWriter csv({"poem_id", "label", "method"});
  const std::string method(aggregation_method_name(truth.method));
  for (std::size_t i = 0; i < truth.item_ids.size(); ++i) {
    csv.row({truth.item_ids[i], std::to_string(truth.labels[i].value()), method});
  }
  return csv.str();
}

GroundTruth parse_ground_truth_csv(std::string_view text) {
  GroundTruth truth;
  bool header_seen = false, method_seen = false;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto fields = split_csv_line(line);
    for (auto& f : fields) f = std::string(trim(f));
    if (!header_seen) {
      if (fields != std::vector<std::string>{"poem_id", "label", "method"}) {
        fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": expected header poem_id,label,method");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": expected 3 fields");
    if (fields[1].size() != 1 || !SentimentScore::valid(fields[1][0] - '0')) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": label must be 1..5");
    }
    const AggregationMethod method = parse_aggregation_method(fields[2]);
    if (method_seen && method != truth.method) {
      fail(ErrorCode::kMalformedRecord, "line " + std::to_string(line_no) + ": mixed aggregation methods");
    }
    truth.method = method;
    method_seen = true;
    if (std::find(truth.item_ids.begin(), truth.item_ids.end(), fields[0]) != truth.item_ids.end()) {
      fail(ErrorCode::kDuplicateId, "line " + std::to_string(line_no) + ": duplicate poem id '" + fields[0] + "'");
    }
    truth.item_ids.push_back(fields[0]);
    truth.labels.emplace_back(fields[1][0] - '0');
  }
  if (truth.item_ids.empty()) fail(ErrorCode::kInsufficientData, "ground truth has no labels");
  return truth;
}

GroundTruth load_ground_truth_csv(const std::filesystem::path& path) {
  try {
    return parse_ground_truth_csv(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string dawid_skene_diagnostics_json(const DawidSkeneResult& result) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  doc["priors"] = result.priors;
  json raters = json::array();
  for (const auto& c : result.confusions) {
    raters.push_back(json{{"rater_id", c.rater_id}, {"confusion", c.matrix}});
  }
  doc["confusion_matrices"] = std::move(raters);
  doc["log_likelihood"] = result.log_likelihood;
  return doc.dump(2) + "\n";
}

}  // namespace divan
