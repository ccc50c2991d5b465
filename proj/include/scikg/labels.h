// Copyright 2026 The SciKG Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCIKG_LABELS_H_
#define SCIKG_LABELS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scikg {

// Lowercases UTF-8 text. ASCII plus the Latin-1, Latin Extended-A, Greek and
// Cyrillic blocks are folded with their default lowercase mapping; every
// other code point (and any invalid byte) is copied unchanged.
std::string Lowercase(std::string_view text);

// Canonical key for every entity and relation comparison: lowercase, interior
// whitespace runs collapsed to one space, ends trimmed. Returns nullopt when
// nothing is left, which callers treat as "drop this label".
std::optional<std::string> NormalizeLabel(std::string_view raw);

// True iff NormalizeLabel(label) == label.
bool IsNormalized(std::string_view label);

// Splits a normalized label on single spaces.
std::vector<std::string> SplitTokens(std::string_view label);

// Joins tokens with a separator.
std::string JoinTokens(const std::vector<std::string> &tokens,
                       std::string_view separator = " ");

// "semantic web" -> "semantic_web", the key form used in embedding tables.
std::string Underscored(std::string_view label);

}  // namespace scikg

#endif  // SCIKG_LABELS_H_
