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

#ifndef SCIKG_GRAPH_H_
#define SCIKG_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scikg/model.h"
#include "scikg/ontology.h"
#include "scikg/select.h"

namespace scikg {

struct KnowledgeGraph {
  TripleSet triples;
  std::string base_iri;
};

// One inference pass over direct super-topics: for (s, r, o) and each parent
// p of o, infers (s, r, p) unless some input triple links s and p in either
// direction. With `to_fixpoint` the pass repeats over the growing set until
// nothing new appears. Returns only the inferred triples.
TripleSet EnhanceWithSupertopics(const TripleSet &triples, const TopicOntology &ontology,
                                 bool to_fixpoint = false);

// Support value -> triple count per source group.
struct SupportHistogram {
  std::map<int, int64_t> ef;
  std::map<int, int64_t> oie;
  std::map<int, int64_t> pos_cons;

  bool operator==(const SupportHistogram &) const = default;
};

// A triple counts once in every group it has a source in; inferred-only
// triples are not counted.
SupportHistogram ComputeSupportHistogram(const TripleSet &triples);

// Rewrites known multi-word entities in each sentence's text with
// underscores, longest match first, one sentence per output line.
std::string UnderscoreSentence(const std::string &text,
                               const std::set<std::string> &multiword_entities);
void ExportUnderscoredCorpus(const std::vector<SentenceAnnotation> &sentences,
                             const std::set<std::string> &entity_universe, std::ostream &out);

// Sidecar records {s, p, o, support, sources, doc_ids}, one per line in key
// order.
void WriteProvenance(const TripleSet &triples, std::ostream &out);
TripleSet ReadProvenance(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_GRAPH_H_
