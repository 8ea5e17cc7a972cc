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

#include "core/error.hpp"

namespace divan {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kIo: return "i/o error";
    case ErrorCode::kMalformedRecord: return "malformed record";
    case ErrorCode::kDuplicateId: return "duplicate id";
    case ErrorCode::kEmptyVerses: return "empty verses";
    case ErrorCode::kUnparseableResponse: return "unparseable response";
    case ErrorCode::kUnknownLabel: return "unknown label";
    case ErrorCode::kTransport: return "transport failure";
    case ErrorCode::kReplayMiss: return "replay miss";
    case ErrorCode::kIncompleteMatrix: return "incomplete rating matrix";
    case ErrorCode::kDegenerateInput: return "degenerate input";
    case ErrorCode::kInsufficientData: return "insufficient data";
    case ErrorCode::kCoverageMismatch: return "coverage mismatch";
    case ErrorCode::kConfig: return "configuration error";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace divan
