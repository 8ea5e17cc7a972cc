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

#include "core/corpus.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <json.hpp>

#include <charconv>
#include <set>

#include "core/error.hpp"
#include "core/report.hpp"

namespace divan {

using json = nlohmann::ordered_json;

bool is_valid_meter_code(std::string_view code) {
  if (code.size() < 2) return false;
  if (code[0] != 'C' && code[0] != 'R' && code[0] != 'P') return false;
  if (code[1] < '1' || code[1] > '9') return false;
  for (std::size_t i = 2; i < code.size(); ++i) {
    if (code[i] < '0' || code[i] > '9') return false;
  }
  return true;
}

std::string normalize_meter_pattern(std::string_view pattern) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) fail(ErrorCode::kInternal, "ICU NFC normalizer unavailable");
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(pattern.data(), static_cast<int32_t>(pattern.size())));
  icu::UnicodeString normalized = nfc->normalize(text, status);
  if (U_FAILURE(status)) fail(ErrorCode::kInvalidArgument, "cannot normalize meter pattern");

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (int32_t i = 0; i < normalized.length();) {
    const UChar32 c = normalized.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(u' '));
    pending_space = false;
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

namespace {

struct ParsedCode {
  char prefix;
  unsigned long index;
};

std::optional<ParsedCode> parse_code(std::string_view code) {
  if (!is_valid_meter_code(code)) return std::nullopt;
  ParsedCode parsed{code[0], 0};
  auto [ptr, ec] = std::from_chars(code.data() + 1, code.data() + code.size(), parsed.index);
  if (ec != std::errc()) return std::nullopt;
  return parsed;
}

}  // namespace

bool MeterCodeLess::operator()(std::string_view a, std::string_view b) const {
  const auto pa = parse_code(a);
  const auto pb = parse_code(b);
  if (pa && pb) {
    if (pa->prefix != pb->prefix) return pa->prefix < pb->prefix;
    return pa->index < pb->index;
  }
  if (pa.has_value() != pb.has_value()) return pa.has_value();
  return a < b;
}

void MeterRegistry::add(std::string_view meter_pattern, std::string_view meter_code) {
  if (!is_valid_meter_code(meter_code)) {
    fail(ErrorCode::kMalformedRecord, "invalid meter code '" + std::string(meter_code) + "'");
  }
  std::string pattern = normalize_meter_pattern(meter_pattern);
  if (pattern.empty()) fail(ErrorCode::kMalformedRecord, "empty meter pattern for " + std::string(meter_code));
  if (by_code_.count(std::string(meter_code))) {
    fail(ErrorCode::kDuplicateId, "meter code registered twice: " + std::string(meter_code));
  }
  if (auto it = by_pattern_.find(pattern); it != by_pattern_.end()) {
    fail(ErrorCode::kDuplicateId, "meter pattern registered twice: " + entries_[it->second].meter_code +
                                      " and " + std::string(meter_code));
  }
  by_pattern_.emplace(pattern, entries_.size());
  by_code_.emplace(std::string(meter_code), entries_.size());
  entries_.push_back({std::move(pattern), std::string(meter_code)});
}

std::optional<std::string> MeterRegistry::lookup(std::string_view meter_pattern) const {
  auto it = by_pattern_.find(normalize_meter_pattern(meter_pattern));
  if (it == by_pattern_.end()) return std::nullopt;
  return entries_[it->second].meter_code;
}

MeterClass MeterRegistry::classify(std::string_view meter_code) {
  if (!is_valid_meter_code(meter_code)) {
    fail(ErrorCode::kInvalidArgument, "invalid meter code '" + std::string(meter_code) + "'");
  }
  switch (meter_code[0]) {
    case 'C': return MeterClass::kCommon;
    case 'R': return MeterClass::kRumiOnly;
    default: return MeterClass::kParvinOnly;
  }
}

namespace {

[[noreturn]] void record_error(ErrorCode code, std::size_t line, const std::string& what) {
  fail(code, "line " + std::to_string(line) + ": " + what);
}

const json& require(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) record_error(ErrorCode::kMalformedRecord, line, std::string("missing key '") + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
  const json& v = require(obj, key, line);
  if (!v.is_string()) record_error(ErrorCode::kMalformedRecord, line, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

json parse_line(std::string_view text, std::size_t line) {
  try {
    json obj = json::parse(text);
    if (!obj.is_object()) record_error(ErrorCode::kMalformedRecord, line, "record is not a JSON object");
    return obj;
  } catch (const json::parse_error& e) {
    record_error(ErrorCode::kMalformedRecord, line, std::string("invalid JSON: ") + e.what());
  }
}

Poem poem_from_json(const json& obj, std::size_t line) {
  Poem poem;
  poem.id = require_string(obj, "id", line);
  if (trim(poem.id).empty()) record_error(ErrorCode::kMalformedRecord, line, "empty poem id");
  poem.poet = require_string(obj, "poet", line);
  poem.title = require_string(obj, "title", line);
  poem.meter_pattern = require_string(obj, "meter_pattern", line);

  const json& verses = require(obj, "verses", line);
  if (!verses.is_array()) record_error(ErrorCode::kMalformedRecord, line, "'verses' must be an array");
  if (verses.empty()) record_error(ErrorCode::kEmptyVerses, line, "poem '" + poem.id + "' has no verses");
  for (const auto& v : verses) {
    if (!v.is_string()) record_error(ErrorCode::kMalformedRecord, line, "verse lines must be strings");
    std::string verse = v.get<std::string>();
    if (trim(verse).empty()) {
      record_error(ErrorCode::kEmptyVerses, line, "poem '" + poem.id + "' has a blank verse line");
    }
    poem.verses.push_back(std::move(verse));
  }

  if (auto it = obj.find("meter_code"); it != obj.end() && !it->is_null()) {
    if (!it->is_string()) record_error(ErrorCode::kMalformedRecord, line, "'meter_code' must be a string");
    std::string code = it->get<std::string>();
    if (!is_valid_meter_code(code)) {
      record_error(ErrorCode::kMalformedRecord, line, "invalid meter code '" + code + "'");
    }
    poem.meter_code = std::move(code);
  }
  return poem;
}

}  // namespace

std::vector<Poem> parse_corpus(std::string_view jsonl) {
  std::vector<Poem> poems;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(jsonl)) {
    ++line_no;
    if (trim(line).empty()) continue;
    Poem poem = poem_from_json(parse_line(line, line_no), line_no);
    if (!seen.insert(poem.id).second) {
      record_error(ErrorCode::kDuplicateId, line_no, "duplicate poem id '" + poem.id + "'");
    }
    poems.push_back(std::move(poem));
  }
  return poems;
}

std::vector<Poem> load_corpus(const std::filesystem::path& path) {
  try {
    return parse_corpus(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::string serialize_corpus(const std::vector<Poem>& poems) {
  std::string out;
  for (const Poem& p : poems) {
    json obj;
    obj["id"] = p.id;
    obj["poet"] = p.poet;
    obj["title"] = p.title;
    obj["verses"] = p.verses;
    obj["meter_pattern"] = p.meter_pattern;
    if (p.meter_code) obj["meter_code"] = *p.meter_code;
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

void write_corpus(const std::vector<Poem>& poems, const std::filesystem::path& path) {
  write_text_file(path, serialize_corpus(poems));
}

MeterRegistry parse_meter_registry(std::string_view jsonl) {
  MeterRegistry registry;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(jsonl)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json obj = parse_line(line, line_no);
    std::string pattern = require_string(obj, "meter_pattern", line_no);
    std::string code = require_string(obj, "meter_code", line_no);
    try {
      registry.add(pattern, code);
    } catch (const Error& e) {
      record_error(e.code(), line_no, e.what());
    }
  }
  return registry;
}

MeterRegistry load_meter_registry(const std::filesystem::path& path) {
  try {
    return parse_meter_registry(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

MeterAssignment assign_meter_codes(std::vector<Poem> poems, const MeterRegistry& registry) {
  if (registry.empty()) fail(ErrorCode::kInvalidArgument, "meter registry is empty");
  MeterAssignment result;
  for (Poem& poem : poems) {
    if (auto code = registry.lookup(poem.meter_pattern)) {
      poem.meter_code = std::move(code);
    } else {
      result.unmatched.push_back({poem.id, poem.meter_pattern});
    }
  }
  result.poems = std::move(poems);
  return result;
}

MeterGroups group_by_meter(const std::vector<Poem>& poems, std::size_t min_count) {
  MeterGroups groups;
  for (const Poem& poem : poems) {
    if (poem.meter_code) groups[*poem.meter_code].push_back(poem);
  }
  std::erase_if(groups, [min_count](const auto& kv) { return kv.second.size() < min_count; });
  return groups;
}

}  // namespace divan
