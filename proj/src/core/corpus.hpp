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

#ifndef DIVAN_CORE_CORPUS_HPP_
#define DIVAN_CORE_CORPUS_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace divan {

struct Poem {
  std::string id;
  std::string poet;
  std::string title;
  std::vector<std::string> verses;
  std::string meter_pattern;
  std::optional<std::string> meter_code;

  friend bool operator==(const Poem&, const Poem&) = default;
};

/// True when `code` is a prefix class letter (C, R or P) followed by a
/// positive index without leading zeros.
bool is_valid_meter_code(std::string_view code);

/// NFC-normalizes, trims and collapses internal whitespace runs to a single
/// ASCII space. Registry lookups compare these normalized forms.
std::string normalize_meter_pattern(std::string_view pattern);

/// Orders meter codes by prefix letter, then by numeric index (C2 < C10).
/// Strings that are not meter codes sort after all codes, lexicographically.
struct MeterCodeLess {
  bool operator()(std::string_view a, std::string_view b) const;
};

enum class MeterClass { kCommon, kRumiOnly, kParvinOnly };

class MeterRegistry {
 public:
  struct Entry {
    std::string meter_pattern;  // normalized
    std::string meter_code;
  };

  /// Throws kMalformedRecord on invalid codes and kDuplicateId when a code or
  /// a normalized pattern is registered twice.
  void add(std::string_view meter_pattern, std::string_view meter_code);

  std::optional<std::string> lookup(std::string_view meter_pattern) const;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  static MeterClass classify(std::string_view meter_code);

 private:
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> by_pattern_;
  std::map<std::string, std::size_t> by_code_;
};

/// Reads a JSON Lines corpus. Blank lines are skipped; every other line must
/// be one poem object. Errors carry the 1-based line number.
std::vector<Poem> load_corpus(const std::filesystem::path& path);
std::vector<Poem> parse_corpus(std::string_view jsonl);

void write_corpus(const std::vector<Poem>& poems, const std::filesystem::path& path);
std::string serialize_corpus(const std::vector<Poem>& poems);

MeterRegistry load_meter_registry(const std::filesystem::path& path);
MeterRegistry parse_meter_registry(std::string_view jsonl);

struct UnmatchedMeter {
  std::string poem_id;
  std::string meter_pattern;
};

struct MeterAssignment {
  std::vector<Poem> poems;
  std::vector<UnmatchedMeter> unmatched;
};

/// Poems whose pattern is registered take the registered code. Unregistered
/// patterns are reported and the poem keeps whatever code it already had.
MeterAssignment assign_meter_codes(std::vector<Poem> poems, const MeterRegistry& registry);

using MeterGroups = std::map<std::string, std::vector<Poem>, MeterCodeLess>;

/// Groups coded poems by meter, dropping groups with fewer than `min_count`
/// poems (inclusive threshold).
MeterGroups group_by_meter(const std::vector<Poem>& poems, std::size_t min_count);

}  // namespace divan

#endif  // DIVAN_CORE_CORPUS_HPP_
