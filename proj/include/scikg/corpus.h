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

#ifndef SCIKG_CORPUS_H_
#define SCIKG_CORPUS_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scikg/integrate.h"
#include "scikg/model.h"

namespace scikg {

// Witnesses of one aggregated triple: sentence-level occurrences per paper.
struct TripleRecord {
  std::map<DocId, int> occurrences;

  DocSet DocIds() const;
  int TotalOccurrences() const;

  bool operator==(const TripleRecord &) const = default;
};

using TripleTable = std::map<Triple, TripleRecord>;

// Directed entity pair -> papers in which both entities occur in one sentence.
using PairDocumentIndex = std::map<EntityPair, DocSet>;

struct EntityRecord {
  EntityType type = EntityType::kGeneric;
  DocSet doc_ids;

  bool operator==(const EntityRecord &) const = default;
};

// Corpus-level raw sets R_EF, R_OIE, R_PoS plus the co-occurrence index and
// the entity universe. Entity stages rewrite it through RewriteCorpus.
struct CorpusState {
  TripleTable ef;
  TripleTable oie;
  TripleTable pos;
  PairDocumentIndex pairs;
  std::map<std::string, EntityRecord> entities;

  const TripleTable &Table(TripleSource source) const;
  TripleTable &Table(TripleSource source);
  std::set<std::string> EntityUniverse() const;
  // Labels seen in a given paper.
  std::map<DocId, std::set<std::string>> EntitiesByDoc() const;

  bool operator==(const CorpusState &) const = default;
};

// Merges sentence results keyed by (subject, relation, object, source). The
// result does not depend on the order of `extractions`.
CorpusState AggregateCorpus(const std::vector<SentenceExtraction> &extractions);

// |papers(pair)|, 0 for unseen pairs.
int ComputeSupport(const EntityPair &pair, const PairDocumentIndex &index);

// Flattens a table into candidate triples of one source.
std::vector<CandidateTriple> ToCandidates(const TripleTable &table, TripleSource source);

// Maps (paper, label) to the labels that replace it; empty drops the label.
using LabelRewriter = std::function<std::vector<std::string>(const DocId &, const std::string &)>;

// Applies a per-paper label rewrite to every entity, pair and triple endpoint.
// Endpoints are expanded to the product of their rewrites; self-loops are
// dropped; colliding keys merge their witnesses.
CorpusState RewriteCorpus(const CorpusState &corpus, const LabelRewriter &rewrite);

// Checkpoint format: one JSON object per line, kinds "entity", "pair" and
// "triple".
void WriteCorpus(const CorpusState &corpus, std::ostream &out);
CorpusState ReadCorpus(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_CORPUS_H_
