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

#include "core/textprep.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "core/error.hpp"

namespace divan {
namespace {

std::string words(std::size_t n, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += sep;
    out += "w" + std::to_string(i);
  }
  return out;
}

std::string joined(const ChunkSet& set) {
  std::string out;
  for (const auto& c : set.chunks) out += c;
  return out;
}

TEST(ConcatVerses, Joins) {
  Poem p;
  p.verses = {"a", "b"};
  EXPECT_EQ(concat_verses(p), "a\nb");
  p.verses = {"a"};
  EXPECT_EQ(concat_verses(p), "a");
  p.verses = {"v1", "v2", "v3"};
  EXPECT_EQ(concat_verses(p, " / "), "v1 / v2 / v3");
}

TEST(WhitespaceTokenizer, CoversTextContiguously) {
  const Tokenizer t = whitespace_tokenizer();
  const std::string text = "  alpha beta\n\tgamma ";
  const auto spans = t.split(text);
  ASSERT_EQ(spans.size(), 3u);
  std::size_t pos = 0;
  for (const TokenSpan& s : spans) {
    EXPECT_EQ(s.offset, pos);
    pos += s.length;
  }
  EXPECT_EQ(pos, text.size());
  EXPECT_TRUE(t.split("").empty());
  EXPECT_EQ(t.split("   ").size(), 1u);
}

TEST(CodepointTokenizer, CountsCodepoints) {
  const auto spans = codepoint_tokenizer().split("دل a");
  EXPECT_EQ(spans.size(), 4u);
}

TEST(ChunkDocument, FitsInOneChunk) {
  const std::string doc = words(300);
  const ChunkSet set = chunk_document(doc, 512, whitespace_tokenizer());
  ASSERT_EQ(set.chunks.size(), 1u);
  EXPECT_EQ(set.token_counts[0], 300u);
  EXPECT_EQ(set.chunks[0], doc);
}

TEST(ChunkDocument, HardCutWithoutSeparator) {
  const std::string doc = words(1000);
  const ChunkSet set = chunk_document(doc, 512, whitespace_tokenizer());
  ASSERT_EQ(set.chunks.size(), 2u);
  EXPECT_EQ(set.token_counts[0], 512u);
  EXPECT_EQ(set.token_counts[1], 488u);
  EXPECT_EQ(joined(set), doc);
}

TEST(ChunkDocument, EmptyDocumentGivesOneEmptyChunk) {
  const ChunkSet set = chunk_document("", 512, whitespace_tokenizer());
  ASSERT_EQ(set.chunks.size(), 1u);
  EXPECT_EQ(set.chunks[0], "");
  EXPECT_EQ(set.token_counts[0], 0u);
}

TEST(ChunkDocument, PrefersVerseBoundary) {
  // Three verses of 4 tokens each; a window of 10 should end after verse 2.
  const std::string doc = "a b c d\ne f g h\ni j k l";
  const ChunkSet set = chunk_document(doc, 10, whitespace_tokenizer());
  ASSERT_EQ(set.chunks.size(), 2u);
  EXPECT_EQ(set.chunks[0], "a b c d\ne f g h\n");
  EXPECT_EQ(set.chunks[1], "i j k l");
  EXPECT_EQ(set.token_counts[0], 8u);
}

TEST(ChunkDocument, RejectsZeroLimit) {
  EXPECT_THROW(chunk_document("a", 0, whitespace_tokenizer()), Error);
}

TEST(ChunkDocument, RandomDocumentsKeepInvariants) {
  std::mt19937_64 rng(7);
  const char* pieces[] = {"دل", "جان", "a", "bb", " ", "  ", "\n", "\t", "عشق"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string doc;
    const std::size_t n = rng() % 200;
    for (std::size_t i = 0; i < n; ++i) doc += pieces[rng() % std::size(pieces)];
    const std::size_t limit = 1 + rng() % 20;
    for (const Tokenizer& t : {whitespace_tokenizer(), codepoint_tokenizer()}) {
      const ChunkSet set = chunk_document(doc, limit, t);
      EXPECT_EQ(joined(set), doc);
      ASSERT_EQ(set.chunks.size(), set.token_counts.size());
      for (std::size_t i = 0; i < set.chunks.size(); ++i) {
        EXPECT_LE(set.token_counts[i], limit);
        EXPECT_EQ(set.token_counts[i], t.split(set.chunks[i]).size());
      }
    }
  }
}

TEST(CombineChunkScores, Examples) {
  EXPECT_EQ(combine_chunk_scores(to_scores(std::vector<int>{5, 4})).value(), 5);
  EXPECT_EQ(combine_chunk_scores(to_scores(std::vector<int>{3})).value(), 3);
  EXPECT_EQ(combine_chunk_scores(to_scores(std::vector<int>{1, 2, 2})).value(), 2);
  EXPECT_EQ(combine_chunk_scores(to_scores(std::vector<int>{1, 2})).value(), 2);
  EXPECT_THROW(combine_chunk_scores(ScoreList{}), Error);
}

TEST(CombineChunkScores, PermutationInvariantAndInRange) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> v(1 + rng() % 8);
    for (int& x : v) x = 1 + static_cast<int>(rng() % 5);
    const int base = combine_chunk_scores(to_scores(v)).value();
    EXPECT_GE(base, 1);
    EXPECT_LE(base, 5);
    std::shuffle(v.begin(), v.end(), rng);
    EXPECT_EQ(combine_chunk_scores(to_scores(v)).value(), base);
  }
}

}  // namespace
}  // namespace divan
