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

#include <algorithm>

#include "core/error.hpp"

namespace divan {

namespace {

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::vector<TokenSpan> split_whitespace(std::string_view text) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_ascii_space(text[i]) && (i == 0 || is_ascii_space(text[i - 1]))) starts.push_back(i);
  }
  std::vector<TokenSpan> spans;
  if (text.empty()) return spans;
  if (starts.empty()) return {TokenSpan{0, text.size()}};
  starts.front() = 0;
  spans.reserve(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : text.size();
    spans.push_back({starts[k], end - starts[k]});
  }
  return spans;
}

std::vector<TokenSpan> split_codepoints(std::string_view text) {
  std::vector<TokenSpan> spans;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i + 1;
    while (j < text.size() && (static_cast<unsigned char>(text[j]) & 0xC0) == 0x80) ++j;
    spans.push_back({i, j - i});
    i = j;
  }
  return spans;
}

void check_cover(std::string_view text, const std::vector<TokenSpan>& spans, const std::string& name) {
  std::size_t pos = 0;
  for (const TokenSpan& s : spans) {
    if (s.offset != pos || s.length == 0) {
      fail(ErrorCode::kInternal, "tokenizer '" + name + "' produced non-contiguous spans");
    }
    pos += s.length;
  }
  if (pos != text.size()) fail(ErrorCode::kInternal, "tokenizer '" + name + "' did not cover the text");
}

}  // namespace

Tokenizer whitespace_tokenizer() { return {"whitespace", split_whitespace}; }

Tokenizer codepoint_tokenizer() { return {"codepoint", split_codepoints}; }

std::string concat_verses(const Poem& poem, std::string_view separator) {
  std::string doc;
  for (std::size_t i = 0; i < poem.verses.size(); ++i) {
    if (i) doc += separator;
    doc += poem.verses[i];
  }
  return doc;
}

ChunkSet chunk_document(std::string_view doc, std::size_t max_tokens, const Tokenizer& tokenizer,
                        std::string_view separator, std::string poem_id) {
  if (max_tokens < 1) fail(ErrorCode::kInvalidArgument, "max_tokens must be >= 1");
  ChunkSet set;
  set.poem_id = std::move(poem_id);

  const std::vector<TokenSpan> spans = tokenizer.split(doc);
  check_cover(doc, spans, tokenizer.name);
  if (spans.empty()) {
    set.chunks.emplace_back(doc);
    set.token_counts.push_back(0);
    return set;
  }

  // Token boundaries that directly follow a separator occurrence.
  std::vector<bool> verse_break(spans.size() + 1, false);
  if (!separator.empty()) {
    std::vector<std::size_t> starts;
    starts.reserve(spans.size());
    for (const TokenSpan& s : spans) starts.push_back(s.offset);
    for (std::size_t p = doc.find(separator); p != std::string_view::npos; p = doc.find(separator, p + 1)) {
      const std::size_t after = p + separator.size();
      const auto it = std::lower_bound(starts.begin(), starts.end(), after);
      verse_break[static_cast<std::size_t>(it - starts.begin())] = true;
    }
  }

  std::size_t first = 0;
  while (first < spans.size()) {
    std::size_t last = spans.size();
    if (last - first > max_tokens) {
      last = first + max_tokens;
      for (std::size_t k = last; k > first; --k) {
        if (verse_break[k]) {
          last = k;
          break;
        }
      }
    }
    const std::size_t begin = spans[first].offset;
    const std::size_t end = last < spans.size() ? spans[last].offset : doc.size();
    set.chunks.emplace_back(doc.substr(begin, end - begin));
    set.token_counts.push_back(last - first);
    first = last;
  }
  return set;
}

SentimentScore combine_chunk_scores(std::span<const SentimentScore> scores) {
  if (scores.empty()) fail(ErrorCode::kInvalidArgument, "cannot combine an empty list of chunk scores");
  return round_to_score(mean_of(scores));
}

}  // namespace divan
