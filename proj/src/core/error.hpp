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

#ifndef DIVAN_CORE_ERROR_HPP_
#define DIVAN_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace divan {

// Mirrors divan_status in the C header; keep the numbering in sync.
enum class ErrorCode {
  kInvalidArgument = 1,
  kIo = 2,
  kMalformedRecord = 3,
  kDuplicateId = 4,
  kEmptyVerses = 5,
  kUnparseableResponse = 6,
  kUnknownLabel = 7,
  kTransport = 8,
  kReplayMiss = 9,
  kIncompleteMatrix = 10,
  kDegenerateInput = 11,
  kInsufficientData = 12,
  kCoverageMismatch = 13,
  kConfig = 14,
  kInternal = 15,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace divan

#endif  // DIVAN_CORE_ERROR_HPP_
