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

#ifndef SCIKG_MODEL_H_
#define SCIKG_MODEL_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scikg {

using DocId = std::string;
using DocSet = std::set<DocId>;

enum class EntityType {
  kTask,
  kMethod,
  kMetric,
  kMaterial,
  kOtherScientificTerm,
  kGeneric,
  // Ontology-matched mention. Never used for relation typing.
  kTopic,
};

// Where a mention came from.
enum class MentionSource { kEF, kCSO, kOIE };

// Where a triple came from. CONS marks triples admitted by the consistency
// gate, INFERRED those produced by super-topic inference.
enum class TripleSource : uint8_t { kEF, kOIE, kPOS, kCONS, kINFERRED };

std::string_view ToString(EntityType type);
std::string_view ToString(MentionSource source);
std::string_view ToString(TripleSource source);
std::optional<EntityType> ParseEntityType(std::string_view text);
std::optional<MentionSource> ParseMentionSource(std::string_view text);
std::optional<TripleSource> ParseTripleSource(std::string_view text);

// Small value set of TripleSource tags.
class SourceSet {
 public:
  SourceSet() = default;
  SourceSet(std::initializer_list<TripleSource> sources) {
    for (TripleSource s : sources) Add(s);
  }

  void Add(TripleSource s) { bits_ |= Bit(s); }
  void Remove(TripleSource s) { bits_ &= static_cast<uint8_t>(~Bit(s)); }
  void Merge(SourceSet other) { bits_ |= other.bits_; }
  bool Has(TripleSource s) const { return (bits_ & Bit(s)) != 0; }
  bool empty() const { return bits_ == 0; }
  bool OnlyInferred() const { return bits_ == Bit(TripleSource::kINFERRED); }

  std::vector<TripleSource> Members() const;

  // "EF|POS" style rendering, in enum order.
  std::string ToString() const;
  static std::optional<SourceSet> Parse(std::string_view text);

  friend bool operator==(SourceSet a, SourceSet b) = default;

 private:
  static uint8_t Bit(TripleSource s) {
    return static_cast<uint8_t>(1u << static_cast<unsigned>(s));
  }
  uint8_t bits_ = 0;
};

struct Token {
  std::string surface;
  std::string lemma;
  std::string pos;  // Penn Treebank tag
};

struct EntityMention {
  int start_token = 0;
  int end_token = 0;  // exclusive
  std::string label;  // normalized
  EntityType type = EntityType::kGeneric;
  MentionSource source = MentionSource::kEF;
};

// Relation reported by an upstream extractor between two mentions of the
// same sentence. Indices point into SentenceAnnotation::entities.
struct RawRelation {
  int subject = 0;
  int object = 0;
  std::string label;
  MentionSource source = MentionSource::kEF;
};

struct SentenceAnnotation {
  DocId doc_id;
  int sent_idx = 0;
  std::string text;
  std::vector<Token> tokens;
  std::vector<EntityMention> entities;
  std::vector<RawRelation> relations;
};

// (subject, relation, object) with normalized labels. Ordered so it can key
// sorted containers; every output of the pipeline iterates in this order.
struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  auto operator<=>(const Triple &) const = default;
  bool operator==(const Triple &) const = default;
};

// Ordered entity pair; (a, b) and (b, a) are distinct.
struct EntityPair {
  std::string subject;
  std::string object;

  auto operator<=>(const EntityPair &) const = default;
  bool operator==(const EntityPair &) const = default;
};

inline EntityPair PairOf(const Triple &t) { return {t.subject, t.object}; }

// A raw triple from one source. `occurrences` counts sentence-level
// extractions and is the multiplicity used when collapsing labels per pair.
struct CandidateTriple {
  Triple triple;
  TripleSource source = TripleSource::kEF;
  DocSet doc_ids;
  int occurrences = 1;
};

// Throws Error unless the triple has normalized, distinct endpoints and a
// non-empty witness set.
void CheckCandidate(const CandidateTriple &candidate);

struct SupportedTriple {
  Triple triple;
  // Distinct papers in which the entity pair co-occurs.
  int support = 0;
  SourceSet sources;
  DocSet doc_ids;
};

struct EvaluationReport {
  int64_t tp = 0;
  int64_t fp = 0;
  int64_t fn = 0;
  double precision = 0;
  double recall = 0;
  double fmeasure = 0;
  // Set when a ratio had a zero denominator and was reported as 0.
  bool degenerate = false;
};

}  // namespace scikg

#endif  // SCIKG_MODEL_H_
