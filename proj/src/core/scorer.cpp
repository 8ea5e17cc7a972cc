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

#include "core/scorer.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "core/error.hpp"
#include "core/report.hpp"

namespace divan {

using json = nlohmann::ordered_json;

std::string build_prompt(std::string_view poem_text) {
  if (poem_text.empty()) fail(ErrorCode::kInvalidArgument, "cannot build a prompt for empty poem text");
  std::string prompt(kPromptTemplate);
  prompt.push_back('\n');
  prompt += poem_text;
  return prompt;
}

namespace {

// Decodes one digit at text[i] (ASCII, U+0660..U+0669 or U+06F0..U+06F9).
// Returns the digit value and its byte width, or width 0 when not a digit.
std::pair<int, std::size_t> digit_at(std::string_view text, std::size_t i) {
  const auto c0 = static_cast<unsigned char>(text[i]);
  if (c0 >= '0' && c0 <= '9') return {c0 - '0', 1};
  if (i + 1 < text.size()) {
    const auto c1 = static_cast<unsigned char>(text[i + 1]);
    if (c0 == 0xD9 && c1 >= 0xA0 && c1 <= 0xA9) return {c1 - 0xA0, 2};
    if (c0 == 0xDB && c1 >= 0xB0 && c1 <= 0xB9) return {c1 - 0xB0, 2};
  }
  return {0, 0};
}

}  // namespace

SentimentScore parse_score_response(std::string_view raw) {
  std::size_t i = 0;
  while (i < raw.size()) {
    auto [digit, width] = digit_at(raw, i);
    if (width == 0) {
      ++i;
      continue;
    }
    long value = 0;
    std::size_t digits = 0;
    while (i < raw.size() && width != 0) {
      if (digits < 9) value = value * 10 + digit;
      ++digits;
      i += width;
      if (i < raw.size()) std::tie(digit, width) = digit_at(raw, i);
    }
    if (digits <= 9 && SentimentScore::valid(static_cast<int>(value))) {
      return SentimentScore(static_cast<int>(value));
    }
  }
  fail(ErrorCode::kUnparseableResponse, "no score in 1..5 found in response: \"" + std::string(raw) + "\"");
}

SentimentScore map_categorical_label(std::string_view label) {
  std::string lowered(trim(label));
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "negative") return SentimentScore(1);
  if (lowered == "neutral") return SentimentScore(3);
  if (lowered == "positive") return SentimentScore(5);
  fail(ErrorCode::kUnknownLabel, "unknown sentiment label \"" + std::string(label) + "\"");
}

std::string_view scorer_kind_name(ScorerKind kind) {
  switch (kind) {
    case ScorerKind::kRemoteNumeric: return "remote-numeric";
    case ScorerKind::kRemoteCategorical: return "remote-categorical";
    case ScorerKind::kReplay: return "replay";
    case ScorerKind::kConstant: return "constant";
  }
  return "unknown";
}

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    fail(ErrorCode::kConfig, "scorer spec: bad value for '" + std::string(key) + "': " + std::string(value));
  }
  return out;
}

ScorerKind parse_kind(std::string_view value) {
  for (auto kind : {ScorerKind::kRemoteNumeric, ScorerKind::kRemoteCategorical, ScorerKind::kReplay,
                    ScorerKind::kConstant}) {
    if (scorer_kind_name(kind) == value) return kind;
  }
  fail(ErrorCode::kConfig, "scorer spec: unknown kind '" + std::string(value) + "'");
}

}  // namespace

ScorerSpec parse_scorer_spec(std::string_view text, std::optional<double> default_temperature) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::kConfig, "scorer spec: expected key=value, got '" + std::string(item) + "'");
    std::string key(trim(item.substr(0, eq)));
    if (!kv.emplace(key, std::string(trim(item.substr(eq + 1)))).second) {
      fail(ErrorCode::kConfig, "scorer spec: key given twice: " + key);
    }
  }

  ScorerSpec spec;
  auto kind_it = kv.find("kind");
  if (kind_it == kv.end()) fail(ErrorCode::kConfig, "scorer spec: missing 'kind' in '" + std::string(text) + "'");
  spec.kind = parse_kind(kind_it->second);
  switch (spec.kind) {
    case ScorerKind::kRemoteNumeric:
    case ScorerKind::kReplay:
      spec.max_input_tokens = kChatMaxTokens;
      break;
    case ScorerKind::kRemoteCategorical:
      spec.max_input_tokens = kEncoderMaxTokens;
      spec.endpoint.use_prompt_template = false;
      break;
    case ScorerKind::kConstant:
      spec.max_input_tokens = kEncoderMaxTokens;
      break;
  }

  if (default_temperature) spec.endpoint.temperature = *default_temperature;

  for (const auto& [key, value] : kv) {
    if (key == "kind") continue;
    if (key == "id") spec.scorer_id = value;
    else if (key == "max_tokens") spec.max_input_tokens = parse_number<std::size_t>(key, value);
    else if (key == "url") spec.endpoint.url = value;
    else if (key == "model") spec.endpoint.model = value;
    else if (key == "api_key_env") spec.endpoint.api_key_env = value;
    else if (key == "temperature") spec.endpoint.temperature = parse_number<double>(key, value);
    else if (key == "timeout") spec.endpoint.timeout = std::chrono::seconds(parse_number<long>(key, value));
    else if (key == "attempts") spec.retry.max_attempts = parse_number<int>(key, value);
    else if (key == "backoff_ms") spec.retry.initial_backoff = std::chrono::milliseconds(parse_number<long>(key, value));
    else if (key == "parse_retries") spec.retry.parse_retries = parse_number<int>(key, value);
    else if (key == "prompt") {
      if (value != "template" && value != "raw") fail(ErrorCode::kConfig, "scorer spec: prompt must be template or raw");
      spec.endpoint.use_prompt_template = value == "template";
    } else if (key == "tokenizer") {
      if (value == "whitespace") spec.tokenizer = whitespace_tokenizer();
      else if (value == "codepoint") spec.tokenizer = codepoint_tokenizer();
      else fail(ErrorCode::kConfig, "scorer spec: unknown tokenizer '" + value + "'");
    } else if (key == "value") spec.constant_value = parse_number<int>(key, value);
    else if (key == "path") spec.transcript = value;
    else if (key == "source") spec.transcript_source = value;
    else fail(ErrorCode::kConfig, "scorer spec: unknown key '" + key + "'");
  }
  if (spec.scorer_id.empty()) {
    spec.scorer_id = spec.endpoint.model.empty() || spec.kind == ScorerKind::kConstant || spec.kind == ScorerKind::kReplay
                         ? std::string(scorer_kind_name(spec.kind))
                         : spec.endpoint.model;
  }
  validate_scorer_spec(spec);
  return spec;
}

void validate_scorer_spec(const ScorerSpec& spec) {
  if (spec.scorer_id.empty()) fail(ErrorCode::kConfig, "scorer id is empty");
  if (spec.max_input_tokens < 1) fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': max_input_tokens must be >= 1");
  if (spec.retry.max_attempts < 1 || spec.retry.parse_retries < 0) {
    fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': invalid retry policy");
  }
  switch (spec.kind) {
    case ScorerKind::kConstant:
      if (!SentimentScore::valid(spec.constant_value)) {
        fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': constant value must be in 1..5");
      }
      break;
    case ScorerKind::kReplay:
      if (spec.transcript.empty() || !std::filesystem::is_regular_file(spec.transcript)) {
        fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': transcript not found: " + spec.transcript.string());
      }
      break;
    case ScorerKind::kRemoteNumeric:
    case ScorerKind::kRemoteCategorical:
      if (spec.endpoint.model.empty()) fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': model is required");
      if (spec.endpoint.url.empty()) fail(ErrorCode::kConfig, "scorer '" + spec.scorer_id + "': url is required");
      break;
  }
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ScoreRecord Scorer::score_poem(const Poem& poem, int run_index) {
  if (run_index < 0) fail(ErrorCode::kInvalidArgument, "run_index must be non-negative");
  return do_score(poem, run_index);
}

namespace {

struct ChunkResult {
  SentimentScore score;
  std::string raw;
};

class ChunkedScorer : public Scorer {
 public:
  using Scorer::Scorer;

 protected:
  ScoreRecord do_score(const Poem& poem, int run_index) override {
    const ChunkSet chunks = chunk_document(concat_verses(poem), spec_.max_input_tokens, spec_.tokenizer,
                                           kVerseSeparator, poem.id);
    ScoreRecord record;
    record.poem_id = poem.id;
    record.scorer_id = spec_.scorer_id;
    record.run_index = run_index;
    for (const std::string& chunk : chunks.chunks) {
      ChunkResult r = score_chunk(chunk);
      record.chunk_scores.push_back(r.score);
      record.raw_responses.push_back(std::move(r.raw));
    }
    record.final_score = combine_chunk_scores(record.chunk_scores);
    record.timestamp = utc_timestamp();
    record.temperature = temperature();
    return record;
  }

  virtual ChunkResult score_chunk(const std::string& chunk) = 0;
  virtual std::optional<double> temperature() const { return std::nullopt; }
};

class ConstantScorer final : public ChunkedScorer {
 public:
  using ChunkedScorer::ChunkedScorer;

 protected:
  ChunkResult score_chunk(const std::string&) override {
    ++calls_;
    return {SentimentScore(spec_.constant_value), std::to_string(spec_.constant_value)};
  }
};

class RemoteScorer final : public ChunkedScorer {
 public:
  RemoteScorer(ScorerSpec spec, std::shared_ptr<ChatTransport> transport)
      : ChunkedScorer(std::move(spec)), transport_(std::move(transport)) {
    if (const char* key = std::getenv(spec_.endpoint.api_key_env.c_str()); key && *key) api_key_ = key;
  }

 protected:
  ChunkResult score_chunk(const std::string& chunk) override {
    if (chunk.empty()) fail(ErrorCode::kInvalidArgument, "scorer '" + spec_.scorer_id + "': empty chunk");
    const std::string content = spec_.endpoint.use_prompt_template ? build_prompt(chunk) : chunk;
    json body;
    body["model"] = spec_.endpoint.model;
    body["messages"] = json::array({json{{"role", "user"}, {"content", content}}});
    body["temperature"] = spec_.endpoint.temperature;
    HttpRequest request;
    request.url = spec_.endpoint.url;
    request.body = body.dump();
    request.timeout = spec_.endpoint.timeout;
    if (!api_key_.empty()) request.headers.emplace_back("Authorization", "Bearer " + api_key_);

    for (int attempt = 0;; ++attempt) {
      try {
        std::string raw = extract_content(send_with_retry(request));
        SentimentScore score = spec_.kind == ScorerKind::kRemoteCategorical ? map_categorical_label(raw)
                                                                            : parse_score_response(raw);
        return {score, std::move(raw)};
      } catch (const Error& e) {
        const bool parse_failure =
            e.code() == ErrorCode::kUnparseableResponse || e.code() == ErrorCode::kUnknownLabel;
        if (!parse_failure || attempt >= spec_.retry.parse_retries) {
          throw Error(e.code(), "scorer '" + spec_.scorer_id + "': " + e.what());
        }
      }
    }
  }

  std::optional<double> temperature() const override { return spec_.endpoint.temperature; }

 private:
  static bool retryable(const HttpResponse& r) { return r.status == 0 || r.status == 429 || r.status >= 500; }

  std::string send_with_retry(const HttpRequest& request) {
    auto backoff = spec_.retry.initial_backoff;
    HttpResponse response;
    for (int attempt = 1;; ++attempt) {
      ++calls_;
      response = transport_->post(request);
      if (response.status >= 200 && response.status < 300) return response.body;
      if (!retryable(response) || attempt >= spec_.retry.max_attempts) break;
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::duration_cast<std::chrono::milliseconds>(backoff * spec_.retry.multiplier);
    }
    std::string detail = response.status == 0 ? response.error : "HTTP " + std::to_string(response.status);
    fail(ErrorCode::kTransport, "request to " + request.url + " failed: " + detail);
  }

  static std::string extract_content(const std::string& body) {
    try {
      const json doc = json::parse(body);
      return doc.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception&) {
      fail(ErrorCode::kUnparseableResponse, "response is not a chat completion: " + body.substr(0, 200));
    }
  }

  std::shared_ptr<ChatTransport> transport_;
  std::string api_key_;
};

class ReplayScorer final : public Scorer {
 public:
  explicit ReplayScorer(ScorerSpec spec) : Scorer(std::move(spec)) {
    for (ScoreRecord& r : read_score_records(spec_.transcript)) {
      if (spec_.transcript_source && r.scorer_id != *spec_.transcript_source) continue;
      auto key = std::make_pair(r.poem_id, r.run_index);
      if (auto it = entries_.find(key); it != entries_.end() && it->second.scorer_id != r.scorer_id) {
        fail(ErrorCode::kMalformedRecord, "transcript " + spec_.transcript.string() + " holds records from '" +
                                              it->second.scorer_id + "' and '" + r.scorer_id +
                                              "'; set source= to pick one");
      }
      entries_.insert_or_assign(std::move(key), std::move(r));
    }
  }

 protected:
  ScoreRecord do_score(const Poem& poem, int run_index) override {
    ++calls_;
    auto it = entries_.find(std::make_pair(poem.id, run_index));
    if (it == entries_.end()) {
      fail(ErrorCode::kReplayMiss, "scorer '" + spec_.scorer_id + "': transcript has no record for poem '" +
                                       poem.id + "' run " + std::to_string(run_index));
    }
    ScoreRecord record = it->second;
    record.scorer_id = spec_.scorer_id;
    return record;
  }

 private:
  std::map<std::pair<std::string, int>, ScoreRecord> entries_;
};

}  // namespace

std::unique_ptr<Scorer> make_scorer(const ScorerSpec& spec, std::shared_ptr<ChatTransport> transport) {
  validate_scorer_spec(spec);
  switch (spec.kind) {
    case ScorerKind::kConstant:
      return std::make_unique<ConstantScorer>(spec);
    case ScorerKind::kReplay:
      return std::make_unique<ReplayScorer>(spec);
    case ScorerKind::kRemoteNumeric:
    case ScorerKind::kRemoteCategorical:
      if (!transport) transport = make_http_transport();
      return std::make_unique<RemoteScorer>(spec, std::move(transport));
  }
  fail(ErrorCode::kInternal, "unhandled scorer kind");
}

ScoreRecord score_poem(Scorer& scorer, const Poem& poem, int run_index, ScoreCache& cache) {
  if (auto hit = cache.find(scorer.spec().scorer_id, poem.id, run_index)) return *hit;
  ScoreRecord record = scorer.score_poem(poem, run_index);
  cache.append(record);
  return record;
}

CorpusScoring score_corpus(Scorer& scorer, const std::vector<Poem>& poems, const ScoringOptions& options,
                           ScoreCache& cache) {
  if (options.runs < 1) fail(ErrorCode::kInvalidArgument, "runs must be >= 1");
  const std::size_t runs = static_cast<std::size_t>(options.runs);
  const std::size_t total = poems.size() * runs;
  const std::string& scorer_id = scorer.spec().scorer_id;

  CorpusScoring result;
  std::vector<std::optional<ScoreRecord>> slots(total);
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < total; ++i) {
    const int run = static_cast<int>(i % runs);
    if (auto hit = cache.find(scorer_id, poems[i / runs].id, run)) {
      slots[i] = std::move(hit);
      ++result.reused;
    } else {
      pending.push_back(i);
    }
  }

  std::vector<std::exception_ptr> errors(total);
  std::vector<bool> done(pending.size(), false);
  std::size_t next_commit = 0;
  std::mutex commit_mu;
  std::exception_ptr commit_error;
  std::atomic<std::size_t> next_task{0};

  auto worker = [&] {
    for (std::size_t t = next_task++; t < pending.size(); t = next_task++) {
      const std::size_t i = pending[t];
      try {
        slots[i] = scorer.score_poem(poems[i / runs], static_cast<int>(i % runs));
      } catch (...) {
        errors[i] = std::current_exception();
      }
      std::lock_guard lock(commit_mu);
      done[t] = true;
      while (next_commit < pending.size() && done[next_commit]) {
        const std::size_t j = pending[next_commit];
        if (!errors[j]) {
          try {
            cache.append(*slots[j]);
          } catch (...) {
            if (!commit_error) commit_error = std::current_exception();
          }
        }
        ++next_commit;
      }
    }
  };

  const std::size_t threads = std::min(std::max<std::size_t>(options.parallelism, 1), pending.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < total; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  if (commit_error) std::rethrow_exception(commit_error);
  result.computed = pending.size();
  result.records.reserve(total);
  for (auto& slot : slots) result.records.push_back(std::move(*slot));
  return result;
}

}  // namespace divan
