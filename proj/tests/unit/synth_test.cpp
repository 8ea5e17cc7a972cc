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

#include <gtest/gtest.h>

#include "core/annotations.hpp"
#include "core/error.hpp"

namespace divan {
namespace {

TEST(SeededRng, Reproducible) {
  SeededRng a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    EXPECT_EQ(u, b.uniform());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(a.below(7), 7u);
    b.below(7);
  }
}

TEST(Synth, SeededAndBalanced) {
  SynthOptions o;
  const auto a = synthesize_annotations(o);
  const auto b = synthesize_annotations(o);
  EXPECT_EQ(annotations_to_csv(a.matrix), annotations_to_csv(b.matrix));
  EXPECT_EQ(a.truth, b.truth);
  EXPECT_EQ(a.matrix.items(), 100u);
  EXPECT_EQ(a.matrix.raters(), 4u);
  EXPECT_TRUE(a.matrix.complete());
  std::array<int, 5> counts{};
  for (auto t : a.truth) ++counts[t.index()];
  for (int c : counts) EXPECT_EQ(c, 20);
  o.seed = 43;
  EXPECT_NE(annotations_to_csv(synthesize_annotations(o).matrix), annotations_to_csv(a.matrix));
}

TEST(Synth, AccuracyIsRoughlyHonoured) {
  SynthOptions o;
  o.items = 2000;
  o.annotators = 3;
  o.accuracy = 0.85;
  const auto d = synthesize_annotations(o);
  std::size_t hit = 0;
  for (std::size_t i = 0; i < d.matrix.items(); ++i) {
    for (std::size_t r = 0; r < 3; ++r) hit += *d.matrix.at(i, r) == d.truth[i];
  }
  EXPECT_NEAR(static_cast<double>(hit) / 6000.0, 0.85, 0.02);
}

TEST(Synth, AdversaryMirrorsTruth) {
  SynthOptions o;
  o.scenario = SynthScenario::kAdversarial;
  const auto d = synthesize_annotations(o);
  for (std::size_t i = 0; i < d.matrix.items(); ++i) EXPECT_EQ(d.matrix.at(i, 3)->value(), 6 - d.truth[i].value());
}

TEST(Synth, UnanimousAndMeanDominant) {
  SynthOptions o;
  o.scenario = SynthScenario::kUnanimous;
  const auto u = synthesize_annotations(o);
  for (std::size_t i = 0; i < u.matrix.items(); ++i) {
    for (std::size_t r = 0; r < u.matrix.raters(); ++r) EXPECT_EQ(*u.matrix.at(i, r), u.truth[i]);
  }
  o.scenario = SynthScenario::kMeanDominant;
  EXPECT_THROW(synthesize_annotations(o), Error);
  o.annotators = 3;
  const auto m = synthesize_annotations(o);
  for (std::size_t i = 0; i < m.matrix.items(); ++i) {
    int sum = 0;
    for (std::size_t r = 0; r < 3; ++r) sum += m.matrix.at(i, r)->value();
    EXPECT_EQ(sum, 3 * m.truth[i].value());
  }
}

TEST(Synth, ScenarioNamesAndValidation) {
  for (auto s : {SynthScenario::kNoisy, SynthScenario::kAdversarial, SynthScenario::kUnanimous,
                 SynthScenario::kMeanDominant}) {
    EXPECT_EQ(parse_synth_scenario(synth_scenario_name(s)), s);
  }
  EXPECT_THROW(parse_synth_scenario("chaos"), Error);
  SynthOptions o;
  o.items = 0;
  EXPECT_THROW(synthesize_annotations(o), Error);
  o.items = 10;
  o.accuracy = 1.5;
  EXPECT_THROW(synthesize_annotations(o), Error);
  o.accuracy = 0.5;
  o.scenario = SynthScenario::kAdversarial;
  o.adversarial = 9;
  EXPECT_THROW(synthesize_annotations(o), Error);
}

}  // namespace
}  // namespace divan
