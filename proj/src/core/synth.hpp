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

#ifndef DIVAN_CORE_SYNTH_HPP_
#define DIVAN_CORE_SYNTH_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "core/agreement.hpp"

namespace divan {

/// Seeded generator whose output depends only on the seed (the standard
/// distributions are implementation-defined, so they are not used here).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

enum class SynthScenario {
  /// Every annotator is right with probability `accuracy`, otherwise picks
  /// one of the other four scores uniformly.
  kNoisy,
  /// `adversarial` annotators report 6 - truth; the rest are noisy.
  kAdversarial,
  /// Everyone reports the truth.
  kUnanimous,
  /// Three annotators whose ratings average to the truth while two of them
  /// agree one step away from it (e.g. 2,2,5 for truth 3).
  kMeanDominant,
};

SynthScenario parse_synth_scenario(std::string_view name);
std::string_view synth_scenario_name(SynthScenario scenario);

struct SynthOptions {
  std::uint64_t seed = 42;
  std::size_t items = 100;
  std::size_t annotators = 4;
  double accuracy = 0.85;
  std::size_t adversarial = 1;
  SynthScenario scenario = SynthScenario::kNoisy;
};

struct SyntheticAnnotations {
  RatingMatrix matrix;
  /// Planted labels, balanced over 1..5 and shuffled.
  ScoreList truth;
};

SyntheticAnnotations synthesize_annotations(const SynthOptions& options);

}  // namespace divan

#endif  // DIVAN_CORE_SYNTH_HPP_
