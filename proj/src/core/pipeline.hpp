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

#ifndef DIVAN_CORE_PIPELINE_HPP_
#define DIVAN_CORE_PIPELINE_HPP_

#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/score.hpp"
#include "core/transport.hpp"

namespace divan {

using LogFn = std::function<void(const std::string&)>;

struct CommandResult {
  /// Report files written, relative to the output directory.
  std::vector<std::string> files;
  /// Backend requests issued (analyze only); never written to reports.
  std::size_t backend_calls = 0;
};

/// Most frequent score, ties to the lower score. Consolidates repeated runs.
SentimentScore modal_score(std::span<const SentimentScore> scores);

/// Scores the corpus with every configured scorer and writes meter_stats.csv,
/// reliability.csv, poem_scores.csv, plots/*.tsv and the analyze section of
/// summary.json (plus validation_sample.csv when requested).
CommandResult run_analyze(const RunConfig& config, const LogFn& log = {},
                          std::shared_ptr<ChatTransport> transport = nullptr);

/// Writes ground_truth.csv, aggregation_qwk.csv, ds_diagnostics.json and the
/// ground_truth section of summary.json.
CommandResult run_ground_truth(const RunConfig& config, const LogFn& log = {});

/// Writes benchmark.csv and the benchmark section of summary.json.
CommandResult run_benchmark(const RunConfig& config, const LogFn& log = {});

/// Agreement metrics over an annotation file; logs them and writes
/// agreement.csv.
CommandResult run_agree(const RunConfig& config, const LogFn& log = {});

/// Writes annotations.csv and truth.csv for a seeded synthetic population.
CommandResult run_synth(const RunConfig& config, const LogFn& log = {});

}  // namespace divan

#endif  // DIVAN_CORE_PIPELINE_HPP_
