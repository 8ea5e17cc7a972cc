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

#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "divan/divan.h"

namespace {

struct Flag {
  const char* key;
  const char* help;
};

constexpr Flag kFlags[] = {
    {"corpus", "Poem corpus (JSONL)"},
    {"registry", "Meter registry (JSONL) used to assign meter codes"},
    {"runs", "Scoring runs per scorer"},
    {"min-poems", "Minimum poems for a meter to be reported (default 15)"},
    {"out", "Output directory"},
    {"cache", "Score cache path (default <out>/score_cache.jsonl)"},
    {"seed", "Random seed for synth"},
    {"temperature", "Default sampling temperature for remote scorers"},
    {"parallelism", "Concurrent scoring requests"},
    {"run-index", "Use this run instead of the modal consolidation"},
    {"std-reference", "poet or global mean as the std-dev reference"},
    {"validation-sample", "Also write validation_sample.csv (true/false)"},
    {"n-high", "Validation sample: high-disagreement poems"},
    {"n-consensus", "Validation sample: zero-disagreement poems"},
    {"annotations", "Annotation CSV (poem_id,rater_id,score)"},
    {"ground-truth", "Ground truth CSV for benchmark"},
    {"difference", "Krippendorff difference: interval or ordinal"},
    {"tol", "Dawid-Skene convergence tolerance"},
    {"max-iter", "Dawid-Skene iteration cap"},
    {"items", "Synth: number of items"},
    {"annotators", "Synth: number of annotators"},
    {"accuracy", "Synth: diagonal accuracy of faithful annotators"},
    {"adversarial", "Synth: number of adversarial annotators"},
    {"scenario", "Synth: noisy, adversarial, unanimous or mean-dominant"},
};

void log_line(void*, const char* line) { std::fprintf(stderr, "%s\n", line); }

int report(divan_status status) {
  if (status == DIVAN_OK) return 0;
  std::fprintf(stderr, "divan: error (%s): %s\n", divan_status_string(status), divan_last_error());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentiment statistics over metered poetry corpora"};
  app.require_subcommand(1);
  app.set_version_flag("--version", divan_version());

  std::string config_file;
  std::vector<std::string> scorers;
  std::map<std::string, std::string> values;

  app.add_option("--config", config_file, "key=value configuration file; flags override it");
  app.add_option("--scorer", scorers, "Scorer spec, e.g. kind=replay,id=m,path=t.jsonl (repeatable)");
  for (const Flag& f : kFlags) {
    app.add_option(std::string("--") + f.key, values[f.key], f.help);
  }

  using Runner = divan_status (*)(const divan_config*);
  const std::pair<const char*, Runner> commands[] = {
      {"analyze", divan_run_analyze},
      {"ground-truth", divan_run_ground_truth},
      {"benchmark", divan_run_benchmark},
      {"agree", divan_run_agree},
      {"synth", divan_run_synth},
  };
  const char* help[] = {
      "Score the corpus and write meter statistics, reliability and plot tables",
      "Aggregate annotations and select the ground-truth method",
      "Rank scorers against the ground truth by average QWK",
      "Agreement metrics over an annotation file",
      "Generate a seeded synthetic annotation matrix",
  };
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    app.add_subcommand(commands[i].first, help[i])->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  divan_config* config = nullptr;
  if (int rc = report(divan_config_create(&config))) return rc;
  divan_config_set_logger(config, log_line, nullptr);

  int rc = 0;
  if (!config_file.empty()) rc = report(divan_config_load_file(config, config_file.c_str()));
  for (const Flag& f : kFlags) {
    if (rc) break;
    if (app.count(std::string("--") + f.key) > 0) rc = report(divan_config_set(config, f.key, values[f.key].c_str()));
  }
  if (!scorers.empty()) divan_config_clear_scorers(config);
  for (const std::string& s : scorers) {
    if (rc) break;
    rc = report(divan_config_set(config, "scorer", s.c_str()));
  }
  if (!rc) {
    for (const auto& [name, run] : commands) {
      if (app.got_subcommand(name)) rc = report(run(config));
    }
  }
  divan_config_free(config);
  return rc;
}
