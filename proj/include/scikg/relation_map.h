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

#ifndef SCIKG_RELATION_MAP_H_
#define SCIKG_RELATION_MAP_H_

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scikg/clustering.h"
#include "scikg/corpus.h"
#include "scikg/embeddings.h"

namespace scikg {

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

enum class MapProvenance { kClusterCentroid, kCurated, kEfStatic };

std::string_view ToString(MapProvenance provenance);

// Verb -> representative relation. Representatives map to themselves.
class RelationMap {
 public:
  struct Entry {
    std::string representative;
    MapProvenance provenance = MapProvenance::kClusterCentroid;

    bool operator==(const Entry &) const = default;
  };

  void Set(const std::string &label, const std::string &representative, MapProvenance provenance);
  const Entry *Find(const std::string &label) const;
  // The representative, or the label itself when unmapped.
  const std::string &Apply(const std::string &label) const;
  bool Contains(const std::string &label) const { return entries_.count(label) > 0; }

  // True when M(M(x)) == M(x) for every mapped x.
  bool IsIdempotent() const;
  // Label -> representative without provenance.
  std::map<std::string, std::string> Mapping() const;

  const std::map<std::string, Entry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Entry> entries_;
};

// Default mapping for the extractor framework's relation types.
LabelPairs DefaultEfStaticMap();

// The member nearest (cosine) to the unweighted mean of the cluster; ties go
// to the smallest label. Members without an embedding are ignored; if none
// has one, the smallest label is returned.
std::string ClusterRepresentative(const std::vector<std::string> &cluster,
                                  const EmbeddingTable &embeddings);

// Cluster entries first, then EF static entries, then curated overrides.
// Curated targets become fixed points and other entries pointing at an
// overridden label follow it. Throws if the result cannot be made idempotent.
RelationMap BuildRelationMap(const ClusterPartition &partition, const EmbeddingTable &embeddings,
                             const LabelPairs &curated, const LabelPairs &ef_static);

// Checks a curated map: a key whose value is itself mapped elsewhere is an
// error; keys outside `known_labels` are kept with a warning.
LabelPairs ImportCuratedMap(const LabelPairs &pairs, const std::set<std::string> &known_labels,
                            std::vector<std::string> *warnings = nullptr);

// Curation file: one "<verb>\t<representative>" row per clustered verb,
// preceded by a "# cluster <n>: <representative>" comment per cluster.
void ExportRelationClusters(const ClusterPartition &partition, const RelationMap &map,
                            std::ostream &out);
// Reads a curation or static map file; '#' lines are comments.
LabelPairs ReadRelationMapFile(std::istream &in, const std::string &name);
LabelPairs LoadRelationMapFile(const std::string &path);

// Checkpoint form "<verb>\t<representative>\t<provenance>".
void WriteRelationMap(const RelationMap &map, std::ostream &out);
RelationMap ReadRelationMap(std::istream &in, const std::string &name);

// Rewrites the relation of every triple; unmapped labels stay and are
// reported once each in `unmapped`.
TripleTable ApplyRelationMap(const TripleTable &table, const RelationMap &map,
                             std::set<std::string> *unmapped = nullptr);
CorpusState ApplyRelationMap(const CorpusState &corpus, const RelationMap &map,
                             std::set<std::string> *unmapped = nullptr);

}  // namespace scikg

#endif  // SCIKG_RELATION_MAP_H_
