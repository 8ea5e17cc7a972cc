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

#include "core/config.hpp"

#include <algorithm>
#include <charconv>

#include "core/error.hpp"
#include "core/report.hpp"

namespace divan {

namespace {

template <typename T>
T number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    fail(ErrorCode::kConfig, "bad value for '" + std::string(key) + "': '" + std::string(value) + "'");
  }
  return out;
}

std::size_t count(std::string_view key, std::string_view value) {
  if (!value.empty() && value.front() == '-') {
    fail(ErrorCode::kConfig, "'" + std::string(key) + "' must be non-negative");
  }
  return number<std::size_t>(key, value);
}

bool boolean(std::string_view key, std::string_view value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") return true;
  if (value == "0" || value == "false" || value == "no" || value == "off") return false;
  fail(ErrorCode::kConfig, "'" + std::string(key) + "' expects a boolean, got '" + std::string(value) + "'");
}

}  // namespace

void RunConfig::set(std::string_view raw_key, std::string_view raw_value) {
  std::string key(trim(raw_key));
  std::replace(key.begin(), key.end(), '_', '-');
  const std::string_view value = trim(raw_value);

  if (key == "corpus") corpus = value;
  else if (key == "registry") registry = value;
  else if (key == "scorer") scorers.emplace_back(value);
  else if (key == "runs") runs = number<int>(key, value);
  else if (key == "min-poems") min_poems = count(key, value);
  else if (key == "out") out = value;
  else if (key == "cache") cache = value;
  else if (key == "seed") synth.seed = number<std::uint64_t>(key, value);
  else if (key == "temperature") temperature = number<double>(key, value);
  else if (key == "parallelism") parallelism = count(key, value);
  else if (key == "run-index") run_index = number<int>(key, value);
  else if (key == "std-reference") {
    if (value == "poet") std_reference = StdReference::kPoet;
    else if (value == "global") std_reference = StdReference::kGlobal;
    else fail(ErrorCode::kConfig, "std-reference must be poet or global");
  } else if (key == "validation-sample") validation_sample = boolean(key, value);
  else if (key == "n-high") n_high = count(key, value);
  else if (key == "n-consensus") n_consensus = count(key, value);
  else if (key == "annotations") annotations = value;
  else if (key == "ground-truth") ground_truth = value;
  else if (key == "difference") {
    if (value == "interval") difference = Difference::kInterval;
    else if (value == "ordinal") difference = Difference::kOrdinal;
    else fail(ErrorCode::kConfig, "difference must be interval or ordinal");
  } else if (key == "tol") dawid_skene.tol = number<double>(key, value);
  else if (key == "max-iter") dawid_skene.max_iter = number<int>(key, value);
  else if (key == "items") synth.items = count(key, value);
  else if (key == "annotators") synth.annotators = count(key, value);
  else if (key == "accuracy") synth.accuracy = number<double>(key, value);
  else if (key == "adversarial") synth.adversarial = count(key, value);
  else if (key == "scenario") synth.scenario = parse_synth_scenario(value);
  else fail(ErrorCode::kConfig, "unknown configuration key '" + std::string(raw_key) + "'");
}

void RunConfig::load_text(std::string_view text) {
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::kConfig, "line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      set(line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void RunConfig::load_file(const std::filesystem::path& path) {
  try {
    load_text(read_text_file(path));
  } catch (const Error& e) {
    throw Error(e.code() == ErrorCode::kIo ? ErrorCode::kIo : ErrorCode::kConfig, path.string() + ": " + e.what());
  }
}

void RunConfig::validate() const {
  if (runs < 1) fail(ErrorCode::kConfig, "runs must be >= 1");
  if (run_index && *run_index < 0) fail(ErrorCode::kConfig, "run-index must be non-negative");
  if (parallelism < 1) fail(ErrorCode::kConfig, "parallelism must be >= 1");
  if (!(dawid_skene.tol > 0.0)) fail(ErrorCode::kConfig, "tol must be positive");
  if (dawid_skene.max_iter < 1) fail(ErrorCode::kConfig, "max-iter must be >= 1");
  if (out.empty()) fail(ErrorCode::kConfig, "out must not be empty");
}

}  // namespace divan
