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

#include "scikg/model.h"

#include <array>
#include <utility>

#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

constexpr std::array<std::pair<EntityType, std::string_view>, 7> kEntityTypes{{
    {EntityType::kTask, "Task"},
    {EntityType::kMethod, "Method"},
    {EntityType::kMetric, "Metric"},
    {EntityType::kMaterial, "Material"},
    {EntityType::kOtherScientificTerm, "Other-Scientific-Term"},
    {EntityType::kGeneric, "Generic"},
    {EntityType::kTopic, "Topic"},
}};

constexpr std::array<std::pair<MentionSource, std::string_view>, 3>
    kMentionSources{{
        {MentionSource::kEF, "EF"},
        {MentionSource::kCSO, "CSO"},
        {MentionSource::kOIE, "OIE"},
    }};

constexpr std::array<std::pair<TripleSource, std::string_view>, 5>
    kTripleSources{{
        {TripleSource::kEF, "EF"},
        {TripleSource::kOIE, "OIE"},
        {TripleSource::kPOS, "POS"},
        {TripleSource::kCONS, "CONS"},
        {TripleSource::kINFERRED, "INFERRED"},
    }};

template <typename E, size_t N>
std::string_view Lookup(const std::array<std::pair<E, std::string_view>, N> &t,
                        E value) {
  for (const auto &[e, name] : t) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, size_t N>
std::optional<E> Find(const std::array<std::pair<E, std::string_view>, N> &t,
                      std::string_view text) {
  for (const auto &[e, name] : t) {
    if (name == text) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view ToString(EntityType type) { return Lookup(kEntityTypes, type); }
std::string_view ToString(MentionSource source) {
  return Lookup(kMentionSources, source);
}
std::string_view ToString(TripleSource source) {
  return Lookup(kTripleSources, source);
}

std::optional<EntityType> ParseEntityType(std::string_view text) {
  return Find(kEntityTypes, text);
}
std::optional<MentionSource> ParseMentionSource(std::string_view text) {
  return Find(kMentionSources, text);
}
std::optional<TripleSource> ParseTripleSource(std::string_view text) {
  return Find(kTripleSources, text);
}

std::vector<TripleSource> SourceSet::Members() const {
  std::vector<TripleSource> members;
  for (const auto &[source, name] : kTripleSources) {
    if (Has(source)) members.push_back(source);
  }
  return members;
}

std::string SourceSet::ToString() const {
  std::string out;
  for (TripleSource s : Members()) {
    if (!out.empty()) out.push_back('|');
    out.append(scikg::ToString(s));
  }
  return out;
}

std::optional<SourceSet> SourceSet::Parse(std::string_view text) {
  SourceSet set;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('|', start);
    if (end == std::string_view::npos) end = text.size();
    auto source = ParseTripleSource(text.substr(start, end - start));
    if (!source) return std::nullopt;
    set.Add(*source);
    start = end + 1;
  }
  return set;
}

void CheckCandidate(const CandidateTriple &candidate) {
  const Triple &t = candidate.triple;
  if (!IsNormalized(t.subject) || !IsNormalized(t.object) ||
      !IsNormalized(t.relation)) {
    throw Error("triple labels must be normalized: (" + t.subject + ", " +
                t.relation + ", " + t.object + ")");
  }
  if (t.subject == t.object) {
    throw Error("triple subject equals object: " + t.subject);
  }
  if (candidate.doc_ids.empty()) {
    throw Error("triple has no witnessing document: (" + t.subject + ", " +
                t.relation + ", " + t.object + ")");
  }
}

}  // namespace scikg
