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

#include "core/pipeline.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "core/aggregation.hpp"
#include "core/agreement.hpp"
#include "core/annotations.hpp"
#include "core/benchmark.hpp"
#include "core/corpus.hpp"
#include "core/error.hpp"
#include "core/meterstats.hpp"
#include "core/report.hpp"
#include "core/score_cache.hpp"
#include "core/scorer.hpp"
#include "core/synth.hpp"

namespace divan {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

SentimentScore modal_score(std::span<const SentimentScore> scores) {
  if (scores.empty()) fail(ErrorCode::kInvalidArgument, "modal score of an empty list");
  std::array<std::size_t, SentimentScore::kLevels> counts{};
  for (auto s : scores) ++counts[s.index()];
  const auto best = std::max_element(counts.begin(), counts.end());
  return SentimentScore(static_cast<int>(best - counts.begin()) + SentimentScore::kMin);
}

namespace {

void emit(const LogFn& log, const std::string& line) {
  if (log) log(line);
}

class ReportWriter {
 public:
  explicit ReportWriter(fs::path out) : out_(std::move(out)) {}

  void write(const std::string& name, std::string_view content) {
    write_text_file(out_ / name, content);
    result_.files.push_back(name);
  }

  /// Replaces one top-level section of summary.json, keeping the others.
  void summary_section(const std::string& section, json value) {
    const fs::path path = out_ / "summary.json";
    json doc = json::object();
    if (fs::exists(path)) {
      try {
        doc = json::parse(read_text_file(path));
        if (!doc.is_object()) doc = json::object();
      } catch (const json::exception&) {
        doc = json::object();
      }
    }
    doc[section] = std::move(value);
    // Sections in a stable order regardless of which command ran first.
    json sorted = json::object();
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) sorted[k] = doc[k];
    write("summary.json", sorted.dump(2) + "\n");
  }

  CommandResult take() { return std::move(result_); }
  CommandResult& result() { return result_; }

 private:
  fs::path out_;
  CommandResult result_;
};

void require_path(const fs::path& path, const char* what) {
  if (path.empty()) fail(ErrorCode::kConfig, std::string(what) + " path is required");
  if (!fs::exists(path)) fail(ErrorCode::kIo, std::string(what) + " not found: " + path.string());
}

json real_or_null(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

// Per-scorer results of the analyze command: scores[poem][run].
struct ScorerRuns {
  ScorerSpec spec;
  std::vector<ScoreList> scores;
};

struct Selection {
  std::string label;
  std::optional<int> run;  // nullopt: modal across runs
};

ScoreList select_scores(const ScorerRuns& sr, const std::vector<std::size_t>& poems, const Selection& sel) {
  ScoreList out;
  out.reserve(poems.size());
  for (std::size_t p : poems) {
    out.push_back(sel.run ? sr.scores[p][static_cast<std::size_t>(*sel.run)] : modal_score(sr.scores[p]));
  }
  return out;
}

}  // namespace

CommandResult run_analyze(const RunConfig& config, const LogFn& log, std::shared_ptr<ChatTransport> transport) {
  config.validate();
  if (config.run_index && *config.run_index >= config.runs) {
    fail(ErrorCode::kConfig, "run-index must be in 0.." + std::to_string(config.runs - 1));
  }
  require_path(config.corpus, "corpus");
  if (config.scorers.empty()) fail(ErrorCode::kConfig, "at least one --scorer is required");

  std::vector<ScorerSpec> specs;
  std::set<std::string> ids;
  for (const std::string& text : config.scorers) {
    specs.push_back(parse_scorer_spec(text, config.temperature));
    if (!ids.insert(specs.back().scorer_id).second) {
      fail(ErrorCode::kConfig, "duplicate scorer id '" + specs.back().scorer_id + "'");
    }
  }

  std::vector<Poem> poems = load_corpus(config.corpus);
  if (poems.empty()) fail(ErrorCode::kInsufficientData, "corpus " + config.corpus.string() + " has no poems");
  std::vector<UnmatchedMeter> unmatched;
  if (!config.registry.empty()) {
    require_path(config.registry, "registry");
    MeterAssignment assigned = assign_meter_codes(std::move(poems), load_meter_registry(config.registry));
    poems = std::move(assigned.poems);
    unmatched = std::move(assigned.unmatched);
    if (!unmatched.empty()) emit(log, fmt::format("{} poem(s) have meters missing from the registry", unmatched.size()));
  }
  emit(log, fmt::format("loaded {} poems from {}", poems.size(), config.corpus.string()));

  ReportWriter reports(config.out);
  ScoreCache cache(config.cache_path());
  ScoringOptions options{config.runs, config.parallelism};
  std::vector<ScorerRuns> results;
  for (const ScorerSpec& spec : specs) {
    auto scorer = make_scorer(spec, transport);
    CorpusScoring scored = score_corpus(*scorer, poems, options, cache);
    emit(log, fmt::format("scorer {}: {} computed, {} from cache, {} backend call(s)", spec.scorer_id,
                          scored.computed, scored.reused, scorer->backend_calls()));
    reports.result().backend_calls += scorer->backend_calls();
    ScorerRuns sr{spec, std::vector<ScoreList>(poems.size())};
    for (const ScoreRecord& r : scored.records) {
      const std::size_t p = static_cast<std::size_t>(&r - scored.records.data()) / static_cast<std::size_t>(config.runs);
      sr.scores[p].push_back(r.final_score);
    }
    results.push_back(std::move(sr));
  }

  // Poets in order of first appearance; "ALL" is the whole corpus.
  std::vector<std::string> poets;
  std::map<std::string, std::vector<std::size_t>> poems_by_poet;
  std::vector<std::size_t> all_poems;
  for (std::size_t p = 0; p < poems.size(); ++p) {
    if (!poems_by_poet.count(poems[p].poet)) poets.push_back(poems[p].poet);
    poems_by_poet[poems[p].poet].push_back(p);
    all_poems.push_back(p);
  }

  std::vector<Selection> selections;
  if (config.run_index) {
    selections.push_back({std::to_string(*config.run_index), config.run_index});
  } else {
    selections.push_back({"modal", std::nullopt});
    if (config.runs > 1) {
      for (int r = 0; r < config.runs; ++r) selections.push_back({std::to_string(r), r});
    }
  }

  // reliability.csv
  CsvWriter reliability({"scorer_id", "poet", "n_poems", "runs", "fleiss_kappa", "all_agree"});
  json reliability_json = json::array();
  for (const ScorerRuns& sr : results) {
    std::vector<std::pair<std::string, const std::vector<std::size_t>*>> groups;
    for (const auto& poet : poets) groups.emplace_back(poet, &poems_by_poet[poet]);
    groups.emplace_back("ALL", &all_poems);
    for (const auto& [poet, members] : groups) {
      std::string kappa = "NA", agree = "NA";
      if (config.runs >= 2) {
        std::vector<std::string> item_ids, run_ids;
        for (std::size_t p : *members) item_ids.push_back(poems[p].id);
        for (int r = 0; r < config.runs; ++r) run_ids.push_back("run" + std::to_string(r));
        RatingMatrix m(std::move(item_ids), std::move(run_ids));
        for (std::size_t k = 0; k < members->size(); ++k) {
          for (std::size_t r = 0; r < static_cast<std::size_t>(config.runs); ++r) m.set(k, r, sr.scores[(*members)[k]][r]);
        }
        const FleissResult f = fleiss_kappa_nominal(m);
        kappa = format_real(f.kappa);
        agree = f.all_agree ? "1" : "0";
        reliability_json.push_back(json{{"scorer_id", sr.spec.scorer_id}, {"poet", poet}, {"fleiss_kappa", f.kappa}});
      }
      reliability.row({sr.spec.scorer_id, poet, std::to_string(members->size()), std::to_string(config.runs), kappa, agree});
    }
  }

  // meter_stats.csv and plot tables (plots use the first selection).
  CsvWriter meter_stats({"scorer_id", "poet", "run", "meter_code", "n_poems", "mean_sentiment", "std_dev",
                         "entropy_bits", "happy_fraction", "polarized_fraction", "neutral_fraction"});
  CsvWriter plot_mean({"scorer_id", "poet", "meter_code", "mean_sentiment"}, '\t');
  CsvWriter plot_std({"scorer_id", "poet", "meter_code", "std_dev"}, '\t');
  CsvWriter plot_entropy({"scorer_id", "poet", "meter_code", "entropy_bits"}, '\t');
  CsvWriter plot_happy({"scorer_id", "poet", "meter_code", "happy_fraction"}, '\t');
  CsvWriter plot_polar({"scorer_id", "poet", "meter_code", "polarized_fraction", "neutral_fraction"}, '\t');
  CsvWriter plot_book({"scorer_id", "poet", "n_poems", "mean_sentiment"}, '\t');
  std::map<std::string, std::size_t, MeterCodeLess> groups_kept;

  for (const ScorerRuns& sr : results) {
    for (std::size_t s = 0; s < selections.size(); ++s) {
      const Selection& sel = selections[s];
      const ScoreList everything = select_scores(sr, all_poems, sel);
      const double global_mean = mean_sentiment(everything);
      for (const auto& poet : poets) {
        const auto& members = poems_by_poet[poet];
        const ScoreList poet_scores = select_scores(sr, members, sel);
        const double poet_mean = mean_sentiment(poet_scores);
        const double reference = config.std_reference == StdReference::kPoet ? poet_mean : global_mean;

        std::vector<Poem> poet_poems;
        std::map<std::string, ScoreList> by_id;
        for (std::size_t k = 0; k < members.size(); ++k) {
          poet_poems.push_back(poems[members[k]]);
          by_id[poems[members[k]].id].push_back(poet_scores[k]);
        }
        MeterScores grouped;
        for (const auto& [code, group] : group_by_meter(poet_poems, config.min_poems)) {
          ScoreList& dst = grouped[code];
          for (const Poem& p : group) dst.push_back(by_id[p.id].front());
        }
        std::vector<MeterStats> rows = compute_meter_stats(grouped, reference);
        rows.push_back(summarize("ALL", poet_scores, reference));
        for (const MeterStats& row : rows) {
          meter_stats.row({sr.spec.scorer_id, poet, sel.label, row.meter_code, std::to_string(row.n_poems),
                           format_real(row.mean_sentiment), format_real(row.std_dev), format_real(row.entropy_bits),
                           format_real(row.happy_fraction), format_real(row.polarized_fraction),
                           format_real(row.neutral_fraction)});
          if (s != 0) continue;
          if (row.meter_code == "ALL") {
            plot_book.row({sr.spec.scorer_id, poet, std::to_string(row.n_poems), format_real(row.mean_sentiment)});
            continue;
          }
          ++groups_kept[row.meter_code];
          plot_mean.row({sr.spec.scorer_id, poet, row.meter_code, format_real(row.mean_sentiment)});
          plot_std.row({sr.spec.scorer_id, poet, row.meter_code, format_real(row.std_dev)});
          plot_entropy.row({sr.spec.scorer_id, poet, row.meter_code, format_real(row.entropy_bits)});
          plot_happy.row({sr.spec.scorer_id, poet, row.meter_code, format_real(row.happy_fraction)});
          plot_polar.row({sr.spec.scorer_id, poet, row.meter_code, format_real(row.polarized_fraction),
                          format_real(row.neutral_fraction)});
        }
      }
    }
  }

  // poem_scores.csv
  CsvWriter poem_scores({"poem_id", "poet", "meter_code", "scorer_id", "score", "run_scores"});
  for (std::size_t p = 0; p < poems.size(); ++p) {
    for (const ScorerRuns& sr : results) {
      std::string runs;
      for (std::size_t r = 0; r < sr.scores[p].size(); ++r) {
        if (r) runs.push_back(';');
        runs += std::to_string(sr.scores[p][r].value());
      }
      const SentimentScore chosen = config.run_index ? sr.scores[p][static_cast<std::size_t>(*config.run_index)]
                                                     : modal_score(sr.scores[p]);
      poem_scores.row({poems[p].id, poems[p].poet, poems[p].meter_code.value_or(""), sr.spec.scorer_id,
                       std::to_string(chosen.value()), runs});
    }
  }

  reports.write("meter_stats.csv", meter_stats.str());
  reports.write("reliability.csv", reliability.str());
  reports.write("poem_scores.csv", poem_scores.str());
  reports.write("plots/mean_sentiment.tsv", plot_mean.str());
  reports.write("plots/std_dev.tsv", plot_std.str());
  reports.write("plots/entropy.tsv", plot_entropy.str());
  reports.write("plots/happy_fraction.tsv", plot_happy.str());
  reports.write("plots/polarization.tsv", plot_polar.str());
  reports.write("plots/book_mean.tsv", plot_book.str());

  if (config.validation_sample) {
    ScoresByScorer by_scorer;
    for (const ScorerRuns& sr : results) {
      auto& dst = by_scorer[sr.spec.scorer_id];
      for (std::size_t p = 0; p < poems.size(); ++p) {
        dst.emplace(poems[p].id, select_scores(sr, {p}, selections.front()).front());
      }
    }
    const ValidationSample sample = select_validation_sample(by_scorer, config.n_high, config.n_consensus);
    CsvWriter csv({"poem_id", "group"});
    for (const auto& id : sample.high_disagreement_ids) csv.row({id, "high-disagreement"});
    for (const auto& id : sample.consensus_ids) csv.row({id, "consensus"});
    reports.write("validation_sample.csv", csv.str());
  }

  json summary;
  summary["corpus_poems"] = poems.size();
  summary["coded_poems"] = std::count_if(poems.begin(), poems.end(), [](const Poem& p) { return p.meter_code.has_value(); });
  json unmatched_json = json::array();
  for (const auto& u : unmatched) unmatched_json.push_back(json{{"poem_id", u.poem_id}, {"meter_pattern", u.meter_pattern}});
  summary["unmatched_meters"] = std::move(unmatched_json);
  summary["poets"] = poets;
  summary["runs"] = config.runs;
  summary["min_poems"] = config.min_poems;
  summary["run_selection"] = selections.front().label;
  summary["std_reference"] = config.std_reference == StdReference::kPoet ? "poet" : "global";
  json scorers_json = json::array();
  for (const ScorerRuns& sr : results) {
    json s;
    s["scorer_id"] = sr.spec.scorer_id;
    s["kind"] = std::string(scorer_kind_name(sr.spec.kind));
    s["max_input_tokens"] = sr.spec.max_input_tokens;
    if (sr.spec.kind == ScorerKind::kRemoteNumeric || sr.spec.kind == ScorerKind::kRemoteCategorical) {
      s["model"] = sr.spec.endpoint.model;
      s["temperature"] = sr.spec.endpoint.temperature;
    }
    scorers_json.push_back(std::move(s));
  }
  summary["scorers"] = std::move(scorers_json);
  summary["fleiss_kappa"] = std::move(reliability_json);
  summary["meters_reported"] = groups_kept.size();
  reports.summary_section("analyze", std::move(summary));

  emit(log, fmt::format("wrote {} report file(s) to {}", reports.result().files.size(), config.out.string()));
  return reports.take();
}

CommandResult run_ground_truth(const RunConfig& config, const LogFn& log) {
  config.validate();
  require_path(config.annotations, "annotations");
  const RatingMatrix matrix = load_annotations_csv(config.annotations);
  if (!matrix.complete()) {
    for (std::size_t i = 0; i < matrix.items(); ++i) {
      for (std::size_t r = 0; r < matrix.raters(); ++r) {
        if (!matrix.at(i, r)) {
          fail(ErrorCode::kIncompleteMatrix, "annotations are incomplete: rater '" + matrix.rater_ids()[r] +
                                                 "' did not rate poem '" + matrix.item_ids()[i] + "'");
        }
      }
    }
  }
  const GroundTruthSelection selection = select_ground_truth(matrix, config.dawid_skene);
  const GroundTruth& winner = selection.winner();

  ReportWriter reports(config.out);
  reports.write("ground_truth.csv", ground_truth_to_csv(winner));
  CsvWriter table({"method", "avg_qwk", "selected"});
  json methods = json::object();
  for (std::size_t k = 0; k < selection.candidates.size(); ++k) {
    const auto& c = selection.candidates[k];
    table.row({std::string(aggregation_method_name(c.method)), format_real(c.selection_score), k == selection.selected ? "1" : "0"});
    methods[std::string(aggregation_method_name(c.method))] = c.selection_score;
  }
  reports.write("aggregation_qwk.csv", table.str());
  reports.write("ds_diagnostics.json", dawid_skene_diagnostics_json(selection.dawid_skene));

  double alpha = std::numeric_limits<double>::quiet_NaN();
  try {
    alpha = krippendorff_alpha(matrix, config.difference);
  } catch (const Error& e) {
    emit(log, std::string("krippendorff alpha unavailable: ") + e.what());
  }
  json summary;
  summary["items"] = matrix.items();
  summary["annotators"] = matrix.raters();
  summary["selected_method"] = std::string(aggregation_method_name(winner.method));
  summary["selected_avg_qwk"] = winner.selection_score;
  summary["avg_qwk_by_method"] = std::move(methods);
  summary["krippendorff_alpha"] = real_or_null(alpha);
  summary["krippendorff_difference"] = config.difference == Difference::kInterval ? "interval" : "ordinal";
  summary["dawid_skene_iterations"] = selection.dawid_skene.iterations;
  summary["dawid_skene_converged"] = selection.dawid_skene.converged;
  reports.summary_section("ground_truth", std::move(summary));

  emit(log, fmt::format("selected {} (average QWK {}), Krippendorff alpha {}",
                        aggregation_method_name(winner.method), format_real(winner.selection_score), format_real(alpha)));
  return reports.take();
}

CommandResult run_benchmark(const RunConfig& config, const LogFn& log) {
  config.validate();
  require_path(config.ground_truth, "ground truth");
  require_path(config.cache_path(), "score cache");
  const GroundTruth truth = load_ground_truth_csv(config.ground_truth);

  // evaluator id -> poem id -> score
  std::map<std::string, std::map<std::string, SentimentScore>> evaluators;
  {
    std::map<std::string, std::map<std::string, std::map<int, SentimentScore>>> runs;
    for (const ScoreRecord& r : read_score_records(config.cache_path())) {
      runs[r.scorer_id][r.poem_id].insert_or_assign(r.run_index, r.final_score);
    }
    for (const auto& [scorer, poems] : runs) {
      for (const auto& [poem, by_run] : poems) {
        if (config.run_index) {
          if (auto it = by_run.find(*config.run_index); it != by_run.end()) evaluators[scorer].emplace(poem, it->second);
        } else {
          ScoreList all;
          for (const auto& [run, score] : by_run) all.push_back(score);
          evaluators[scorer].emplace(poem, modal_score(all));
        }
      }
    }
  }
  if (!config.annotations.empty()) {
    require_path(config.annotations, "annotations");
    const RatingMatrix m = load_annotations_csv(config.annotations);
    for (std::size_t r = 0; r < m.raters(); ++r) {
      std::string id = m.rater_ids()[r];
      if (evaluators.count(id)) id = "annotator:" + id;
      auto& dst = evaluators[id];
      for (std::size_t i = 0; i < m.items(); ++i) {
        if (const auto& c = m.at(i, r)) dst.emplace(m.item_ids()[i], *c);
      }
    }
  }
  if (evaluators.empty()) fail(ErrorCode::kInsufficientData, "no evaluators: the score cache is empty");

  GroundTruth common;
  common.method = truth.method;
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < truth.item_ids.size(); ++i) {
    const bool covered = std::all_of(evaluators.begin(), evaluators.end(),
                                     [&](const auto& e) { return e.second.count(truth.item_ids[i]) > 0; });
    if (covered) {
      common.item_ids.push_back(truth.item_ids[i]);
      common.labels.push_back(truth.labels[i]);
    } else {
      missing.push_back(truth.item_ids[i]);
    }
  }
  if (common.item_ids.empty()) {
    std::string listed;
    for (std::size_t k = 0; k < std::min<std::size_t>(5, missing.size()); ++k) listed += (k ? ", " : "") + missing[k];
    fail(ErrorCode::kCoverageMismatch, "no ground-truth poem is scored by every evaluator; missing: " + listed);
  }
  if (!missing.empty()) emit(log, fmt::format("{} ground-truth poem(s) lack scores and are skipped", missing.size()));

  std::map<std::string, ScoreList> vectors;
  for (const auto& [id, scores] : evaluators) {
    ScoreList& v = vectors[id];
    for (const auto& poem : common.item_ids) v.push_back(scores.at(poem));
  }
  const std::vector<BenchmarkRow> rows = benchmark_scorers(common, vectors);

  ReportWriter reports(config.out);
  reports.write("benchmark.csv", benchmark_to_csv(rows));
  json summary;
  summary["items"] = common.item_ids.size();
  summary["skipped_items"] = missing.size();
  summary["ground_truth_method"] = std::string(aggregation_method_name(truth.method));
  json rows_json = json::array();
  for (const auto& r : rows) rows_json.push_back(json{{"evaluator_id", r.evaluator_id}, {"qwk", r.qwk}, {"accuracy_pct", r.accuracy_pct}});
  summary["rows"] = std::move(rows_json);
  reports.summary_section("benchmark", std::move(summary));
  emit(log, fmt::format("benchmarked {} evaluator(s) on {} poem(s)", rows.size(), common.item_ids.size()));
  return reports.take();
}

CommandResult run_agree(const RunConfig& config, const LogFn& log) {
  config.validate();
  require_path(config.annotations, "annotations");
  const RatingMatrix m = load_annotations_csv(config.annotations);

  auto guarded = [&](auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      emit(log, std::string("skipped metric: ") + e.what());
      return std::numeric_limits<double>::quiet_NaN();
    }
  };
  const double alpha_interval = guarded([&] { return krippendorff_alpha(m, Difference::kInterval); });
  const double alpha_ordinal = guarded([&] { return krippendorff_alpha(m, Difference::kOrdinal); });
  const double fleiss = guarded([&] { return fleiss_kappa_nominal(m).kappa; });
  const double pairwise = mean_pairwise_qwk(m);

  CsvWriter csv({"metric", "value"});
  const std::vector<std::pair<std::string, double>> metrics = {
      {"krippendorff_alpha_interval", alpha_interval},
      {"krippendorff_alpha_ordinal", alpha_ordinal},
      {"fleiss_kappa_nominal", fleiss},
      {"mean_pairwise_qwk", pairwise},
  };
  json summary;
  summary["items"] = m.items();
  summary["raters"] = m.raters();
  summary["complete"] = m.complete();
  for (const auto& [name, value] : metrics) {
    csv.row({name, format_real(value)});
    summary[name] = real_or_null(value);
    emit(log, fmt::format("{}\t{}", name, format_real(value)));
  }
  ReportWriter reports(config.out);
  reports.write("agreement.csv", csv.str());
  reports.summary_section("agree", std::move(summary));
  return reports.take();
}

CommandResult run_synth(const RunConfig& config, const LogFn& log) {
  config.validate();
  const SyntheticAnnotations data = synthesize_annotations(config.synth);
  ReportWriter reports(config.out);
  reports.write("annotations.csv", annotations_to_csv(data.matrix));
  CsvWriter truth({"poem_id", "label"});
  for (std::size_t i = 0; i < data.truth.size(); ++i) {
    truth.row({data.matrix.item_ids()[i], std::to_string(data.truth[i].value())});
  }
  reports.write("truth.csv", truth.str());
  json summary;
  summary["seed"] = config.synth.seed;
  summary["scenario"] = std::string(synth_scenario_name(config.synth.scenario));
  summary["items"] = config.synth.items;
  summary["annotators"] = config.synth.annotators;
  summary["accuracy"] = config.synth.accuracy;
  summary["adversarial"] = config.synth.adversarial;
  reports.summary_section("synth", std::move(summary));
  emit(log, fmt::format("wrote {} synthetic ratings ({} scenario, seed {})", data.matrix.items() * data.matrix.raters(),
                        synth_scenario_name(config.synth.scenario), config.synth.seed));
  return reports.take();
}

}  // namespace divan
