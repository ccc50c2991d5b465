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

#include "scikg/select.h"

#include <algorithm>
#include <set>

#include "scikg/error.h"
#include "scikg/labels.h"
#include "scikg/relations.h"

namespace scikg {

namespace {

void AddWitness(TripleSet &set, const Triple &t, const TripleRecord &record, TripleSource source,
                int support) {
  auto [it, inserted] = set.try_emplace(t);
  SupportedTriple &st = it->second;
  if (inserted) {
    st.triple = t;
    st.support = support;
  }
  st.sources.Add(source);
  for (const auto &[doc, n] : record.occurrences) st.doc_ids.insert(doc);
}

bool IsZero(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0; });
}

}  // namespace

ValidityPartition ComposeValid(const CorpusState &corpus, int min_support) {
  ValidityPartition out;
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE}) {
    for (const auto &[t, record] : corpus.Table(source)) {
      AddWitness(out.valid, t, record, source, ComputeSupport(PairOf(t), corpus.pairs));
    }
  }
  for (const auto &[t, record] : corpus.pos) {
    int support = ComputeSupport(PairOf(t), corpus.pairs);
    if (support >= min_support) {
      AddWitness(out.valid, t, record, TripleSource::kPOS, support);
    } else if (out.valid.count(t) == 0) {
      AddWitness(out.invalid, t, record, TripleSource::kPOS, support);
    }
  }
  return out;
}

std::optional<EntityVector> EmbedEntity(const std::string &label, const EmbeddingTable &table) {
  if (auto v = table.Find(Underscored(label))) {
    return EntityVector{label, Vector(v->begin(), v->end()), VectorProvenance::kDirect};
  }
  Vector sum(table.dimension(), 0.0);
  int found = 0;
  for (const std::string &token : SplitTokens(label)) {
    auto v = table.Find(token);
    if (!v) continue;
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += (*v)[i];
    ++found;
  }
  if (found == 0) return std::nullopt;
  for (double &x : sum) x /= found;
  return EntityVector{label, std::move(sum), VectorProvenance::kTokenAverage};
}

std::optional<Vector> PairFeatures(const Triple &triple, const EmbeddingTable &table) {
  auto s = EmbedEntity(triple.subject, table);
  if (!s) return std::nullopt;
  auto o = EmbedEntity(triple.object, table);
  if (!o) return std::nullopt;
  Vector features = std::move(s->values);
  features.insert(features.end(), o->values.begin(), o->values.end());
  return features;
}

double WuPalmer(const std::string &a, const std::string &b, const LexicalTaxonomy &taxonomy) {
  const std::vector<std::string> &senses_a = taxonomy.Senses(a);
  const std::vector<std::string> &senses_b = taxonomy.Senses(b);
  double best = 0;
  for (const std::string &sa : senses_a) {
    std::set<std::string> ancestors_a = taxonomy.AncestorsInclusive(sa);
    for (const std::string &sb : senses_b) {
      int lcs_depth = 0;
      for (const std::string &c : taxonomy.AncestorsInclusive(sb)) {
        if (ancestors_a.count(c) > 0) lcs_depth = std::max(lcs_depth, taxonomy.Depth(c));
      }
      double score = 2.0 * lcs_depth / (taxonomy.Depth(sa) + taxonomy.Depth(sb));
      best = std::max(best, score);
    }
  }
  return best;
}

TrainingSet BuildTrainingSet(const TripleSet &valid, const EmbeddingTable &table) {
  TrainingSet set;
  std::vector<std::pair<Vector, const std::string *>> rows;
  std::set<std::string> labels;
  for (const auto &[t, st] : valid) {
    auto features = PairFeatures(t, table);
    if (!features) {
      set.skipped.push_back(t);
      continue;
    }
    labels.insert(t.relation);
    rows.emplace_back(std::move(*features), &t.relation);
  }
  set.labels.assign(labels.begin(), labels.end());
  for (auto &[features, relation] : rows) {
    int label = static_cast<int>(
        std::lower_bound(set.labels.begin(), set.labels.end(), *relation) - set.labels.begin());
    set.examples.push_back({std::move(features), label});
  }
  return set;
}

GateScore ConsistencyGate(const std::string &relation, const std::string &predicted,
                          const EmbeddingTable &table, const LexicalTaxonomy &taxonomy,
                          double threshold) {
  GateScore score;
  if (relation == predicted) {
    score.exact = true;
    score.cosine = 1;
    score.wu_palmer = 1;
    score.average = 1;
    score.admitted = true;
    return score;
  }
  auto va = table.Find(Underscored(relation));
  auto vb = table.Find(Underscored(predicted));
  if (va && vb && !IsZero(*va) && !IsZero(*vb)) score.cosine = CosineSimilarity(*va, *vb);
  score.wu_palmer = WuPalmer(relation, predicted, taxonomy);
  score.average = (score.cosine + score.wu_palmer) / 2;
  score.admitted = score.average > threshold;
  return score;
}

ValidationResult ValidateInvalid(const TripleSet &invalid, const ConsistencyClassifier &classifier,
                                 const EmbeddingTable &table, const LexicalTaxonomy &taxonomy,
                                 double threshold) {
  ValidationResult result;
  for (const auto &[t, st] : invalid) {
    GateDecision decision{t, std::nullopt, {}};
    if (auto features = PairFeatures(t, table)) {
      decision.predicted = classifier.PredictLabel(*features);
      decision.score = ConsistencyGate(t.relation, *decision.predicted, table, taxonomy, threshold);
      if (decision.score.admitted) {
        SupportedTriple admitted = st;
        admitted.sources = SourceSet{TripleSource::kCONS};
        result.admitted.emplace(t, std::move(admitted));
      }
    }
    result.decisions.push_back(std::move(decision));
  }
  return result;
}

}  // namespace scikg
