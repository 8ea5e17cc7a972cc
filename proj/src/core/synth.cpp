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

#include "core/synth.hpp"

#include <fmt/format.h>

#include <array>
#include <string>
#include <utility>

#include "core/error.hpp"

namespace divan {

double SeededRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t SeededRng::below(std::size_t n) {
  const auto k = static_cast<std::size_t>(uniform() * static_cast<double>(n));
  return k < n ? k : n - 1;
}

SynthScenario parse_synth_scenario(std::string_view name) {
  for (auto s : {SynthScenario::kNoisy, SynthScenario::kAdversarial, SynthScenario::kUnanimous,
                 SynthScenario::kMeanDominant}) {
    if (synth_scenario_name(s) == name) return s;
  }
  fail(ErrorCode::kConfig, "unknown synth scenario '" + std::string(name) + "'");
}

std::string_view synth_scenario_name(SynthScenario scenario) {
  switch (scenario) {
    case SynthScenario::kNoisy: return "noisy";
    case SynthScenario::kAdversarial: return "adversarial";
    case SynthScenario::kUnanimous: return "unanimous";
    case SynthScenario::kMeanDominant: return "mean-dominant";
  }
  return "unknown";
}

namespace {

int noisy_rating(SeededRng& rng, int truth, double accuracy) {
  if (rng.uniform() < accuracy) return truth;
  int other = static_cast<int>(rng.below(SentimentScore::kLevels - 1)) + SentimentScore::kMin;
  return other >= truth ? other + 1 : other;
}

}  // namespace

SyntheticAnnotations synthesize_annotations(const SynthOptions& o) {
  if (o.items < 1) fail(ErrorCode::kConfig, "synth: items must be >= 1");
  if (o.annotators < 1) fail(ErrorCode::kConfig, "synth: annotators must be >= 1");
  if (!(o.accuracy >= 0.0 && o.accuracy <= 1.0)) fail(ErrorCode::kConfig, "synth: accuracy must be in [0, 1]");
  if (o.scenario == SynthScenario::kAdversarial && o.adversarial > o.annotators) {
    fail(ErrorCode::kConfig, "synth: more adversarial annotators than annotators");
  }
  if (o.scenario == SynthScenario::kMeanDominant && o.annotators != 3) {
    fail(ErrorCode::kConfig, "synth: mean-dominant needs exactly three annotators");
  }

  SeededRng rng(o.seed);
  std::vector<int> truth(o.items);
  for (std::size_t i = 0; i < o.items; ++i) truth[i] = static_cast<int>(i % SentimentScore::kLevels) + 1;
  for (std::size_t i = o.items; i > 1; --i) std::swap(truth[i - 1], truth[rng.below(i)]);

  std::vector<std::string> items, raters;
  for (std::size_t i = 0; i < o.items; ++i) items.push_back(fmt::format("p{:04d}", i + 1));
  for (std::size_t r = 0; r < o.annotators; ++r) raters.push_back(fmt::format("a{}", r + 1));
  SyntheticAnnotations out{RatingMatrix(std::move(items), std::move(raters)), {}};

  for (std::size_t i = 0; i < o.items; ++i) {
    const int t = truth[i];
    out.truth.emplace_back(t);
    // Ratings whose mean is t while the median and mode sit one step off.
    std::array<int, 3> skewed{t, t, t};
    if (o.scenario == SynthScenario::kMeanDominant && t > SentimentScore::kMin && t < SentimentScore::kMax) {
      const bool down = t + 2 <= SentimentScore::kMax && (t - 2 < SentimentScore::kMin || rng.below(2) == 0);
      skewed = down ? std::array<int, 3>{t - 1, t - 1, t + 2} : std::array<int, 3>{t + 1, t + 1, t - 2};
      for (std::size_t k = skewed.size(); k > 1; --k) std::swap(skewed[k - 1], skewed[rng.below(k)]);
    }
    for (std::size_t r = 0; r < o.annotators; ++r) {
      int v = t;
      switch (o.scenario) {
        case SynthScenario::kUnanimous:
          break;
        case SynthScenario::kNoisy:
          v = noisy_rating(rng, t, o.accuracy);
          break;
        case SynthScenario::kAdversarial:
          v = r >= o.annotators - o.adversarial ? SentimentScore::kMax + SentimentScore::kMin - t
                                                : noisy_rating(rng, t, o.accuracy);
          break;
        case SynthScenario::kMeanDominant:
          v = skewed[r];
          break;
      }
      out.matrix.set(i, r, SentimentScore(v));
    }
  }
  return out;
}

}  // namespace divan
