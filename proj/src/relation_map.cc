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

#include "scikg/relation_map.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "scikg/error.h"
#include "scikg/labels.h"
#include "scikg/ontology.h"
#include "scikg/relations.h"

namespace scikg {

std::string_view ToString(MapProvenance provenance) {
  switch (provenance) {
    case MapProvenance::kClusterCentroid: return "CLUSTER_CENTROID";
    case MapProvenance::kCurated: return "CURATED";
    case MapProvenance::kEfStatic: return "EF_STATIC";
  }
  return "";
}

void RelationMap::Set(const std::string &label, const std::string &representative,
                      MapProvenance provenance) {
  entries_[label] = Entry{representative, provenance};
}

const RelationMap::Entry *RelationMap::Find(const std::string &label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::string &RelationMap::Apply(const std::string &label) const {
  const Entry *e = Find(label);
  return e == nullptr ? label : e->representative;
}

bool RelationMap::IsIdempotent() const {
  for (const auto &[label, e] : entries_) {
    if (Apply(e.representative) != e.representative) return false;
  }
  return true;
}

std::map<std::string, std::string> RelationMap::Mapping() const {
  std::map<std::string, std::string> m;
  for (const auto &[label, e] : entries_) m.emplace(label, e.representative);
  return m;
}

LabelPairs DefaultEfStaticMap() {
  return {{"used-for", "uses"},         {"hyponym-of", "skos:broader"},
          {"part-of", "includes"},      {"feature-of", "includes"},
          {"evaluate-for", "evaluates"}, {"compare", "compares"}};
}

std::string ClusterRepresentative(const std::vector<std::string> &cluster,
                                  const EmbeddingTable &embeddings) {
  if (cluster.empty()) throw Error("empty cluster has no representative");
  std::set<std::string> sorted(cluster.begin(), cluster.end());
  std::vector<std::pair<const std::string *, std::span<const double>>> usable;
  Vector mean(embeddings.dimension(), 0.0);
  for (const std::string &label : sorted) {
    auto v = embeddings.Find(Underscored(label));
    if (!v) continue;
    usable.emplace_back(&label, *v);
    for (size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
  }
  bool zero_mean = std::all_of(mean.begin(), mean.end(), [](double x) { return x == 0; });
  if (usable.empty() || zero_mean) return *sorted.begin();
  const std::string *best = nullptr;
  double best_cos = -2;
  for (const auto &[label, v] : usable) {
    if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0; })) continue;
    double c = CosineSimilarity(v, mean);
    if (c > best_cos + kCosineTieTolerance) {
      best = label;
      best_cos = c;
    }
  }
  return best == nullptr ? *sorted.begin() : *best;
}

RelationMap BuildRelationMap(const ClusterPartition &partition, const EmbeddingTable &embeddings,
                             const LabelPairs &curated, const LabelPairs &ef_static) {
  RelationMap map;
  for (const auto &cluster : partition.clusters) {
    std::string rep = ClusterRepresentative(cluster, embeddings);
    for (const std::string &label : cluster) map.Set(label, rep, MapProvenance::kClusterCentroid);
  }
  for (const auto &[label, rep] : ef_static) map.Set(label, rep, MapProvenance::kEfStatic);

  std::set<std::string> fixed;
  for (const auto &[label, rep] : curated) {
    map.Set(label, rep, MapProvenance::kCurated);
    fixed.insert(label);
  }
  for (const auto &[label, rep] : curated) {
    if (fixed.count(rep) == 0) {
      map.Set(rep, rep, MapProvenance::kCurated);
      fixed.insert(rep);
    }
  }
  // Redirect entries whose target moved, until every target is a fixed point.
  std::map<std::string, RelationMap::Entry> entries = map.entries();
  for (const auto &[label, entry] : entries) {
    std::vector<std::string> chain{label};
    std::string target = entry.representative;
    while (map.Apply(target) != target) {
      if (std::find(chain.begin(), chain.end(), target) != chain.end()) {
        chain.push_back(target);
        throw Error("relation map has a cycle: " + JoinTokens(chain, " -> "));
      }
      chain.push_back(target);
      target = map.Apply(target);
    }
    if (target != entry.representative) map.Set(label, target, entry.provenance);
  }
  // Representatives map to themselves.
  entries = map.entries();
  for (const auto &[label, entry] : entries) {
    if (!map.Contains(entry.representative)) {
      map.Set(entry.representative, entry.representative, entry.provenance);
    }
  }
  if (!map.IsIdempotent()) throw Error("relation map is not idempotent");
  return map;
}

LabelPairs ImportCuratedMap(const LabelPairs &pairs, const std::set<std::string> &known_labels,
                            std::vector<std::string> *warnings) {
  std::map<std::string, std::string> m(pairs.begin(), pairs.end());
  if (m.size() != pairs.size()) throw Error("curated map: duplicate verb");
  for (const auto &[label, rep] : pairs) {
    auto it = m.find(rep);
    if (it != m.end() && it->second != rep) {
      throw Error("curated map is not idempotent: " + label + " -> " + rep + " -> " + it->second);
    }
    if (warnings != nullptr && known_labels.count(label) == 0) {
      warnings->push_back("curated map: unknown verb '" + label + "' kept");
    }
  }
  return pairs;
}

void ExportRelationClusters(const ClusterPartition &partition, const RelationMap &map,
                            std::ostream &out) {
  for (size_t i = 0; i < partition.clusters.size(); ++i) {
    const auto &cluster = partition.clusters[i];
    out << "# cluster " << i + 1 << ": " << map.Apply(cluster.front()) << '\n';
    for (const std::string &label : cluster) out << label << '\t' << map.Apply(label) << '\n';
  }
}

LabelPairs ReadRelationMapFile(std::istream &in, const std::string &name) {
  LabelPairs pairs;
  std::set<std::string> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 2) throw LocatedError(name, line_no, "expected <verb>\\t<representative>");
    for (std::string &field : f) {
      auto normalized = NormalizeLabel(field);
      if (!normalized) throw LocatedError(name, line_no, "empty label");
      field = *normalized;
    }
    if (!seen.insert(f[0]).second) {
      throw LocatedError(name, line_no, "duplicate verb '" + f[0] + "'");
    }
    pairs.emplace_back(f[0], f[1]);
  }
  return pairs;
}

LabelPairs LoadRelationMapFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return ReadRelationMapFile(in, path);
}

void WriteRelationMap(const RelationMap &map, std::ostream &out) {
  for (const auto &[label, e] : map.entries()) {
    out << label << '\t' << e.representative << '\t' << ToString(e.provenance) << '\n';
  }
}

RelationMap ReadRelationMap(std::istream &in, const std::string &name) {
  RelationMap map;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 3) throw LocatedError(name, line_no, "expected 3 tab-separated fields");
    MapProvenance p;
    if (f[2] == "CLUSTER_CENTROID") {
      p = MapProvenance::kClusterCentroid;
    } else if (f[2] == "CURATED") {
      p = MapProvenance::kCurated;
    } else if (f[2] == "EF_STATIC") {
      p = MapProvenance::kEfStatic;
    } else {
      throw LocatedError(name, line_no, "unknown provenance '" + f[2] + "'");
    }
    map.Set(f[0], f[1], p);
  }
  if (!map.IsIdempotent()) throw Error(name + ": relation map is not idempotent");
  return map;
}

TripleTable ApplyRelationMap(const TripleTable &table, const RelationMap &map,
                             std::set<std::string> *unmapped) {
  TripleTable out;
  for (const auto &[t, record] : table) {
    if (unmapped != nullptr && !map.Contains(t.relation)) unmapped->insert(t.relation);
    TripleRecord &merged = out[Triple{t.subject, map.Apply(t.relation), t.object}];
    for (const auto &[doc, n] : record.occurrences) merged.occurrences[doc] += n;
  }
  return out;
}

CorpusState ApplyRelationMap(const CorpusState &corpus, const RelationMap &map,
                             std::set<std::string> *unmapped) {
  CorpusState out;
  out.pairs = corpus.pairs;
  out.entities = corpus.entities;
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
    out.Table(source) = ApplyRelationMap(corpus.Table(source), map, unmapped);
  }
  return out;
}

}  // namespace scikg
