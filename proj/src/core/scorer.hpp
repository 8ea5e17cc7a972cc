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

#ifndef DIVAN_CORE_SCORER_HPP_
#define DIVAN_CORE_SCORER_HPP_

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/corpus.hpp"
#include "core/score.hpp"
#include "core/score_cache.hpp"
#include "core/textprep.hpp"
#include "core/transport.hpp"

namespace divan {

inline constexpr std::string_view kPromptTemplate =
    "Analyze the sentiment of the following poem and return a number between 1 and 5, where 1 means "
    "sad, 5 means happy, 3 is neutral, 2 and 4 are intermediate cases. RETURN ONLY ONE NUMBER THAT "
    "SHOWS THE SENTIMENT, (NO LONG ANSWERS JUST A NUMBER)";

inline constexpr std::size_t kEncoderMaxTokens = 512;
inline constexpr std::size_t kChatMaxTokens = 128000;

/// Template, newline, poem text. Throws kInvalidArgument on empty text.
std::string build_prompt(std::string_view poem_text);

/// First standalone integer (ASCII, Arabic-Indic or Persian digits) lying in
/// 1..5. Throws kUnparseableResponse carrying the raw text.
SentimentScore parse_score_response(std::string_view raw);

/// negative -> 1, neutral -> 3, positive -> 5; case-insensitive, surrounding
/// whitespace ignored. Throws kUnknownLabel otherwise.
SentimentScore map_categorical_label(std::string_view label);

enum class ScorerKind { kRemoteNumeric, kRemoteCategorical, kReplay, kConstant };

std::string_view scorer_kind_name(ScorerKind kind);

struct RetryPolicy {
  int max_attempts = 5;
  std::chrono::milliseconds initial_backoff{1000};
  double multiplier = 2.0;
  int parse_retries = 2;
};

struct EndpointConfig {
  std::string url = "https://api.openai.com/v1/chat/completions";
  std::string model;
  std::string api_key_env = "DIVAN_API_KEY";
  double temperature = 0.0;
  std::chrono::seconds timeout{60};
  /// Send the prompt template (true) or the bare chunk text (false).
  bool use_prompt_template = true;
};

struct ScorerSpec {
  std::string scorer_id;
  ScorerKind kind = ScorerKind::kConstant;
  std::size_t max_input_tokens = kEncoderMaxTokens;
  EndpointConfig endpoint;
  RetryPolicy retry;
  Tokenizer tokenizer = whitespace_tokenizer();
  int constant_value = 3;
  std::filesystem::path transcript;
  /// Replay only: restrict the transcript to records of this scorer id.
  std::optional<std::string> transcript_source;
};

/// Parses "kind=remote-numeric,id=gpt4o,model=gpt-4o,url=...". Recognized
/// keys: kind, id, max_tokens, url, model, api_key_env, temperature,
/// timeout, attempts, backoff_ms, parse_retries, prompt (template|raw),
/// tokenizer (whitespace|codepoint), value, path, source.
/// `default_temperature` applies unless the text sets temperature itself.
ScorerSpec parse_scorer_spec(std::string_view text, std::optional<double> default_temperature = std::nullopt);

/// Checks the spec invariants, including that replay transcripts exist.
void validate_scorer_spec(const ScorerSpec& spec);

class Scorer {
 public:
  explicit Scorer(ScorerSpec spec) : spec_(std::move(spec)) {}
  virtual ~Scorer() = default;

  Scorer(const Scorer&) = delete;
  Scorer& operator=(const Scorer&) = delete;

  const ScorerSpec& spec() const { return spec_; }

  /// Concatenates, chunks to the scorer's input limit, scores every chunk and
  /// combines. Replay scorers answer from their transcript instead.
  ScoreRecord score_poem(const Poem& poem, int run_index);

  /// Number of backend requests (or transcript lookups) issued so far.
  std::size_t backend_calls() const { return calls_.load(); }

 protected:
  virtual ScoreRecord do_score(const Poem& poem, int run_index) = 0;

  ScorerSpec spec_;
  std::atomic<std::size_t> calls_{0};
};

std::unique_ptr<Scorer> make_scorer(const ScorerSpec& spec, std::shared_ptr<ChatTransport> transport = nullptr);

/// Returns the cached record when present, otherwise scores and appends.
ScoreRecord score_poem(Scorer& scorer, const Poem& poem, int run_index, ScoreCache& cache);

struct ScoringOptions {
  int runs = 1;
  std::size_t parallelism = 4;
};

struct CorpusScoring {
  /// Poem-major, then run index.
  std::vector<ScoreRecord> records;
  std::size_t computed = 0;
  std::size_t reused = 0;
};

/// Scores every (poem, run) pair, reusing cached records. Work runs on up to
/// `parallelism` threads; new records are appended to the cache in
/// (poem, run) order whatever the completion order. On failure every
/// successful record is still committed and the first failure (in item
/// order) is rethrown.
CorpusScoring score_corpus(Scorer& scorer, const std::vector<Poem>& poems, const ScoringOptions& options,
                           ScoreCache& cache);

std::string utc_timestamp();

}  // namespace divan

#endif  // DIVAN_CORE_SCORER_HPP_
