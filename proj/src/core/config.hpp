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

#ifndef DIVAN_CORE_CONFIG_HPP_
#define DIVAN_CORE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/aggregation.hpp"
#include "core/agreement.hpp"
#include "core/synth.hpp"

namespace divan {

enum class StdReference { kPoet, kGlobal };

struct RunConfig {
  std::filesystem::path corpus;
  std::filesystem::path registry;
  std::vector<std::string> scorers;
  int runs = 3;
  std::size_t min_poems = 15;
  std::filesystem::path out = "divan_out";
  /// Empty means <out>/score_cache.jsonl.
  std::filesystem::path cache;
  std::optional<double> temperature;
  std::size_t parallelism = 4;
  std::optional<int> run_index;
  StdReference std_reference = StdReference::kPoet;

  bool validation_sample = false;
  std::size_t n_high = 80;
  std::size_t n_consensus = 20;

  std::filesystem::path annotations;
  std::filesystem::path ground_truth;
  Difference difference = Difference::kInterval;
  DawidSkeneOptions dawid_skene;

  SynthOptions synth;

  std::filesystem::path cache_path() const { return cache.empty() ? out / "score_cache.jsonl" : cache; }

  /// Applies one setting. Keys accept '-' or '_' (min-poems, min_poems);
  /// `scorer` appends. Throws kConfig on unknown keys or bad values.
  void set(std::string_view key, std::string_view value);

  /// Flat key=value lines; '#' starts a comment; blank lines ignored.
  void load_file(const std::filesystem::path& path);
  void load_text(std::string_view text);

  /// Checks cross-field invariants (runs >= 1 etc.).
  void validate() const;
};

}  // namespace divan

#endif  // DIVAN_CORE_CONFIG_HPP_
