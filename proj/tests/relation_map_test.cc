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

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/clustering.h"
#include "scikg/corpus.h"
#include "scikg/embeddings.h"
#include "scikg/error.h"
#include "scikg/relation_map.h"
#include "test_util.h"

namespace scikg {
namespace {

using testing::DataPath;

const EmbeddingTable &Verbs() {
  static const EmbeddingTable table = LoadEmbeddings(DataPath("verbs50.emb"));
  return table;
}

ClusterPartition Partition(std::vector<std::vector<std::string>> clusters) {
  ClusterPartition p;
  p.clusters = std::move(clusters);
  return p;
}

TEST(RelationMapTest, ClusterMapsToCentroidMember) {
  RelationMap m = BuildRelationMap(
      Partition({{"adopts", "employs", "uses", "utilizes"}}), Verbs(), {}, {});
  for (const char *v : {"uses", "utilizes", "adopts", "employs"}) {
    EXPECT_EQ(m.Apply(v), "uses") << v;
    EXPECT_EQ(m.Find(v)->provenance, MapProvenance::kClusterCentroid);
  }
  EXPECT_TRUE(m.IsIdempotent());
}

TEST(RelationMapTest, CuratedOverrideWins) {
  RelationMap m = BuildRelationMap(Partition({{"limits", "restricts"}, {"constrains"}}), Verbs(),
                                   {{"limits", "constrains"}}, {});
  EXPECT_EQ(m.Apply("limits"), "constrains");
  EXPECT_EQ(m.Find("limits")->provenance, MapProvenance::kCurated);
  EXPECT_EQ(m.Apply("constrains"), "constrains");
  EXPECT_TRUE(m.IsIdempotent());
}

TEST(RelationMapTest, EfStaticDefaults) {
  RelationMap m = BuildRelationMap(Partition({}), Verbs(), {}, DefaultEfStaticMap());
  EXPECT_EQ(m.Apply("hyponym-of"), "skos:broader");
  EXPECT_EQ(m.Apply("used-for"), "uses");
  EXPECT_EQ(m.Apply("part-of"), "includes");
  EXPECT_EQ(m.Apply("feature-of"), "includes");
  EXPECT_EQ(m.Apply("evaluate-for"), "evaluates");
  EXPECT_EQ(m.Apply("compare"), "compares");
  EXPECT_EQ(m.Find("hyponym-of")->provenance, MapProvenance::kEfStatic);
  EXPECT_EQ(m.Apply("skos:broader"), "skos:broader");
}

// Property: M stays idempotent under arbitrary curated overrides.
TEST(RelationMapTest, IdempotentUnderRandomOverrides) {
  const std::vector<std::string> verbs = {"uses", "adopts", "employs", "improves", "enhances",
                                          "limits", "restricts", "supports", "enables"};
  std::mt19937_64 rng(79);
  ClusterPartition p = ClusterRelations(verbs, Verbs(), 0.65);
  for (int trial = 0; trial < 300; ++trial) {
    LabelPairs curated;
    std::set<std::string> keys, targets;
    for (int i = 0; i < 4; ++i) {
      std::string a = verbs[rng() % verbs.size()], b = verbs[rng() % verbs.size()];
      // Valid curated files: no key is another row's target.
      if (keys.count(a) || targets.count(a) || keys.count(b)) continue;
      keys.insert(a);
      targets.insert(b);
      curated.push_back({a, b});
    }
    RelationMap m = BuildRelationMap(p, Verbs(), curated, DefaultEfStaticMap());
    EXPECT_TRUE(m.IsIdempotent());
    for (const auto &[label, entry] : m.entries()) {
      EXPECT_EQ(m.Apply(m.Apply(label)), m.Apply(label)) << label;
    }
    for (const auto &[a, b] : curated) EXPECT_EQ(m.Apply(a), a == b ? a : b);
  }
}

TEST(ImportCuratedMapTest, ChainRejectedUnknownWarned) {
  EXPECT_THROW(ImportCuratedMap({{"a", "b"}, {"b", "c"}}, {"a", "b", "c"}), Error);
  std::vector<std::string> warnings;
  LabelPairs kept = ImportCuratedMap({{"adopts", "applies"}, {"zaps", "uses"}},
                                     {"adopts", "applies", "uses"}, &warnings);
  EXPECT_EQ(kept.size(), 2u);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("zaps"), std::string::npos);
}

TEST(RelationMapFileTest, CommentsAndDuplicates) {
  std::istringstream in("# cluster 0: uses\nuses\tuses\nAdopts\tuses\n\n");
  LabelPairs pairs = ReadRelationMapFile(in, "map.tsv");
  EXPECT_EQ(pairs, (LabelPairs{{"uses", "uses"}, {"adopts", "uses"}}));
  std::istringstream dup("a\tb\na\tc\n");
  EXPECT_THROW(ReadRelationMapFile(dup, "dup.tsv"), Error);
}

TEST(RelationMapFileTest, ExportImportRoundTrip) {
  const std::vector<std::string> verbs = {"uses", "adopts", "employs", "utilizes", "improves",
                                          "enhances", "boosts", "limits"};
  ClusterPartition p = ClusterRelations(verbs, Verbs(), 0.65);
  RelationMap m = BuildRelationMap(p, Verbs(), {}, {});
  std::ostringstream exported;
  ExportRelationClusters(p, m, exported);
  std::istringstream in(exported.str());
  LabelPairs curated = ImportCuratedMap(ReadRelationMapFile(in, "clusters.tsv"),
                                        {verbs.begin(), verbs.end()});
  RelationMap again = BuildRelationMap(p, Verbs(), curated, {});
  EXPECT_EQ(again.Mapping(), m.Mapping());

  std::ostringstream checkpoint;
  WriteRelationMap(m, checkpoint);
  std::istringstream cin(checkpoint.str());
  EXPECT_EQ(ReadRelationMap(cin, "map").entries(), m.entries());
}

TEST(RelationMapFileTest, EditedClusterFileOverrides) {
  const std::vector<std::string> verbs = {"uses", "utilizes", "adopts", "employs"};
  ClusterPartition p = ClusterRelations(verbs, Verbs(), 0.65);
  RelationMap m = BuildRelationMap(p, Verbs(), {}, {});
  std::ostringstream exported;
  ExportRelationClusters(p, m, exported);
  std::string text = exported.str();
  size_t at = text.find("adopts\t");
  ASSERT_NE(at, std::string::npos);
  size_t end = text.find('\n', at);
  text.replace(at, end - at, "adopts\tapplies");
  std::istringstream in(text);
  LabelPairs curated = ImportCuratedMap(ReadRelationMapFile(in, "edited.tsv"),
                                        {verbs.begin(), verbs.end()});
  RelationMap edited = BuildRelationMap(p, Verbs(), curated, {});
  EXPECT_EQ(edited.Apply("adopts"), "applies");
  EXPECT_TRUE(edited.IsIdempotent());
}

TEST(ApplyRelationMapTest, Examples) {
  RelationMap m;
  m.Set("creates", "produces", MapProvenance::kCurated);
  m.Set("produces", "produces", MapProvenance::kCurated);
  m.Set("utilizes", "uses", MapProvenance::kClusterCentroid);
  m.Set("uses", "uses", MapProvenance::kClusterCentroid);
  TripleTable table;
  table[{"knowledge construction", "creates", "ontology integration platform"}]
      .occurrences["d1"] = 1;
  table[{"a", "utilizes", "b"}].occurrences["d1"] = 1;
  table[{"a", "uses", "b"}].occurrences["d2"] = 2;
  table[{"a", "zaps", "c"}].occurrences["d3"] = 1;
  std::set<std::string> unmapped;
  TripleTable out = ApplyRelationMap(table, m, &unmapped);
  EXPECT_EQ(out.size(), 3u);
  EXPECT_TRUE(out.count({"knowledge construction", "produces", "ontology integration platform"}));
  EXPECT_EQ(out.at({"a", "uses", "b"}).DocIds(), (DocSet{"d1", "d2"}));
  EXPECT_EQ(out.at({"a", "uses", "b"}).TotalOccurrences(), 3);
  EXPECT_TRUE(out.count({"a", "zaps", "c"}));
  EXPECT_EQ(unmapped, std::set<std::string>{"zaps"});
}

}  // namespace
}  // namespace scikg
