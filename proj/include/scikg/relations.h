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

#ifndef SCIKG_RELATIONS_H_
#define SCIKG_RELATIONS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "scikg/corpus.h"
#include "scikg/embeddings.h"

namespace scikg {

// Relation label -> multiplicity for one entity pair.
using RelationCounts = std::map<std::string, int>;

// Cosine of the angle between two vectors. Throws on a dimension mismatch or
// a zero vector. The result is clamped to [-1, 1].
double CosineSimilarity(std::span<const double> a, std::span<const double> b);

// Cosines closer than this count as tied, so that rounding noise does not
// override the smallest-label tie-break.
inline constexpr double kCosineTieTolerance = 1e-12;

// The label with the highest multiplicity; ties go to the smallest label.
std::string SelectMostFrequentRelation(const RelationCounts &counts);

struct CentroidChoice {
  std::string label;
  // True when no label had a usable embedding and the most frequent label
  // was taken instead.
  bool fallback = false;
};

// The label whose embedding is closest (cosine) to the multiplicity-weighted
// mean of the embeddable labels. Labels without an embedding, or with a zero
// embedding, do not take part.
CentroidChoice SelectCentroidVerb(const RelationCounts &counts, const EmbeddingTable &embeddings);

// Reduces every table to one relation per entity pair: most frequent for EF,
// centroid verb for OIE and POS. The surviving triple inherits all witnesses
// of the pair within its source. Fallbacks are reported in `log`.
CorpusState CollapseRelations(const CorpusState &corpus, const EmbeddingTable &embeddings,
                              std::vector<std::string> *log = nullptr);

}  // namespace scikg

#endif  // SCIKG_RELATIONS_H_
