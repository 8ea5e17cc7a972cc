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

#ifndef DIVAN_CORE_TEXTPREP_HPP_
#define DIVAN_CORE_TEXTPREP_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.hpp"
#include "core/score.hpp"

namespace divan {

/// Byte range of one token. A tokenizer's spans must be contiguous and cover
/// the whole input, so concatenating the spans reproduces the text.
struct TokenSpan {
  std::size_t offset = 0;
  std::size_t length = 0;
};

struct Tokenizer {
  std::string name;
  std::function<std::vector<TokenSpan>(std::string_view)> split;
};

/// One token per whitespace-delimited word. Each token carries the whitespace
/// that follows it; leading whitespace belongs to the first token. Text that
/// is non-empty but has no words is a single token.
Tokenizer whitespace_tokenizer();

/// One token per UTF-8 code point. Useful when scorers count characters.
Tokenizer codepoint_tokenizer();

inline constexpr std::string_view kVerseSeparator = "\n";

std::string concat_verses(const Poem& poem, std::string_view separator = kVerseSeparator);

struct ChunkSet {
  std::string poem_id;
  std::vector<std::string> chunks;
  std::vector<std::size_t> token_counts;
};

/// Greedy left-to-right split into chunks of at most `max_tokens` tokens.
/// When the remaining text does not fit, the chunk ends after the last
/// separator inside the window; without one it is cut at exactly
/// `max_tokens`. An empty document yields one empty chunk.
ChunkSet chunk_document(std::string_view doc, std::size_t max_tokens, const Tokenizer& tokenizer,
                        std::string_view separator = kVerseSeparator, std::string poem_id = {});

/// Mean of the chunk scores, rounded half away from zero into 1..5.
SentimentScore combine_chunk_scores(std::span<const SentimentScore> scores);

}  // namespace divan

#endif  // DIVAN_CORE_TEXTPREP_HPP_
