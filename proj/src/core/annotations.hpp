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

#ifndef DIVAN_CORE_ANNOTATIONS_HPP_
#define DIVAN_CORE_ANNOTATIONS_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "core/agreement.hpp"

namespace divan {

/// CSV with header `poem_id,rater_id,score`, one row per rating. Items and
/// raters keep their order of first appearance.
RatingMatrix parse_annotations_csv(std::string_view text);
RatingMatrix load_annotations_csv(const std::filesystem::path& path);

/// Item-major, rater order; missing cells are omitted.
std::string annotations_to_csv(const RatingMatrix& matrix);

}  // namespace divan

#endif  // DIVAN_CORE_ANNOTATIONS_HPP_
