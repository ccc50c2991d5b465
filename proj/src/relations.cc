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

#include "scikg/relations.h"

#include <algorithm>
#include <cmath>

#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

double Norm(std::span<const double> v) {
  double sum = 0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

double CosineSimilarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error("cosine similarity: dimension mismatch (" + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()) + ")");
  }
  double na = Norm(a);
  double nb = Norm(b);
  if (na == 0 || nb == 0) throw Error("cosine similarity: zero vector");
  double dot = 0;
  for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

std::string SelectMostFrequentRelation(const RelationCounts &counts) {
  if (counts.empty()) throw Error("no relation labels to choose from");
  auto best = counts.begin();
  for (auto it = counts.begin(); it != counts.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

CentroidChoice SelectCentroidVerb(const RelationCounts &counts, const EmbeddingTable &embeddings) {
  if (counts.empty()) throw Error("no relation labels to choose from");
  std::vector<std::pair<const std::string *, std::span<const double>>> usable;
  Vector mean(embeddings.dimension(), 0.0);
  for (const auto &[label, n] : counts) {
    auto v = embeddings.Find(Underscored(label));
    if (!v || Norm(*v) == 0) continue;
    usable.emplace_back(&label, *v);
    for (size_t i = 0; i < mean.size(); ++i) mean[i] += n * (*v)[i];
  }
  if (usable.empty() || Norm(mean) == 0) {
    return {SelectMostFrequentRelation(counts), true};
  }
  // The scale of the mean does not change any cosine, so no division by the
  // total weight.
  const std::string *best = nullptr;
  double best_cos = -2;
  for (const auto &[label, v] : usable) {
    double c = CosineSimilarity(v, mean);
    if (c > best_cos + kCosineTieTolerance) {
      best = label;
      best_cos = c;
    }
  }
  return {*best, false};
}

CorpusState CollapseRelations(const CorpusState &corpus, const EmbeddingTable &embeddings,
                              std::vector<std::string> *log) {
  CorpusState out;
  out.pairs = corpus.pairs;
  out.entities = corpus.entities;
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
    // The table is ordered by subject, relation, object, so group by pair
    // explicitly.
    std::map<EntityPair, std::vector<const TripleTable::value_type *>> by_pair;
    for (const auto &entry : corpus.Table(source)) by_pair[PairOf(entry.first)].push_back(&entry);

    TripleTable &table = out.Table(source);
    for (const auto &[pair, entries] : by_pair) {
      RelationCounts counts;
      for (const auto *e : entries) counts[e->first.relation] += e->second.TotalOccurrences();
      std::string chosen;
      if (source == TripleSource::kEF) {
        chosen = SelectMostFrequentRelation(counts);
      } else {
        CentroidChoice choice = SelectCentroidVerb(counts, embeddings);
        chosen = choice.label;
        if (choice.fallback && log != nullptr) {
          log->push_back(std::string(ToString(source)) + " (" + pair.subject + ", " + pair.object +
                         "): no embeddable relation, kept most frequent '" + chosen + "'");
        }
      }
      TripleRecord &merged = table[Triple{pair.subject, chosen, pair.object}];
      for (const auto *e : entries) {
        for (const auto &[doc, n] : e->second.occurrences) merged.occurrences[doc] += n;
      }
    }
  }
  return out;
}

}  // namespace scikg
