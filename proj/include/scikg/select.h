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

#ifndef SCIKG_SELECT_H_
#define SCIKG_SELECT_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scikg/classifier.h"
#include "scikg/corpus.h"
#include "scikg/embeddings.h"
#include "scikg/model.h"
#include "scikg/taxonomy.h"

namespace scikg {

using TripleSet = std::map<Triple, SupportedTriple>;

struct ValidityPartition {
  TripleSet valid;
  TripleSet invalid;
};

// EF and OIE triples are valid; POS triples are valid when their pair
// appears in at least `min_support` papers. A POS witness below the threshold
// is dropped from a triple that is valid through another source.
ValidityPartition ComposeValid(const CorpusState &corpus, int min_support);

enum class VectorProvenance { kDirect, kTokenAverage };

struct EntityVector {
  std::string label;
  Vector values;
  VectorProvenance provenance = VectorProvenance::kDirect;
};

// Looks up the underscored label; otherwise averages the vectors of the
// tokens that have one. Unset when no token is embeddable.
std::optional<EntityVector> EmbedEntity(const std::string &label, const EmbeddingTable &table);

// Concatenated subject and object vectors; unset if either is missing.
std::optional<Vector> PairFeatures(const Triple &triple, const EmbeddingTable &table);

// Max over sense pairs of 2 depth(lcs) / (depth(a) + depth(b)). Labels
// without senses score 0.
double WuPalmer(const std::string &a, const std::string &b, const LexicalTaxonomy &taxonomy);

struct TrainingSet {
  std::vector<TrainingExample> examples;
  std::vector<std::string> labels;  // sorted relation labels
  std::vector<Triple> skipped;      // endpoints without an embedding
};

TrainingSet BuildTrainingSet(const TripleSet &valid, const EmbeddingTable &table);

struct GateScore {
  bool exact = false;
  double cosine = 0;     // 0 when either relation lacks an embedding
  double wu_palmer = 0;
  double average = 0;
  bool admitted = false;
};

// Admits when the relations are equal or (cosine + wu_palmer) / 2 > threshold.
GateScore ConsistencyGate(const std::string &relation, const std::string &predicted,
                          const EmbeddingTable &table, const LexicalTaxonomy &taxonomy,
                          double threshold);

struct GateDecision {
  Triple triple;
  std::optional<std::string> predicted;  // unset when an endpoint is unembeddable
  GateScore score;
};

struct ValidationResult {
  // Admitted triples, tagged CONS in place of their original sources.
  TripleSet admitted;
  std::vector<GateDecision> decisions;  // one per invalid triple, in key order
};

ValidationResult ValidateInvalid(const TripleSet &invalid, const ConsistencyClassifier &classifier,
                                 const EmbeddingTable &table, const LexicalTaxonomy &taxonomy,
                                 double threshold);

}  // namespace scikg

#endif  // SCIKG_SELECT_H_
