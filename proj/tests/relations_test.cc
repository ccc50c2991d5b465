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

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/corpus.h"
#include "scikg/error.h"
#include "scikg/relations.h"
#include "test_util.h"

namespace scikg {
namespace {

using testing::MakeTable;

TEST(CosineTest, Examples) {
  std::vector<double> x{1, 0}, y{0, 1}, d{1, 1};
  EXPECT_DOUBLE_EQ(CosineSimilarity(x, x), 1.0);
  EXPECT_DOUBLE_EQ(CosineSimilarity(x, y), 0.0);
  EXPECT_NEAR(CosineSimilarity(d, x), 0.7071, 1e-4);
  std::vector<double> zero{0, 0}, three{1, 0, 0};
  EXPECT_THROW(CosineSimilarity(zero, x), Error);
  EXPECT_THROW(CosineSimilarity(three, x), Error);
}

TEST(MostFrequentTest, Examples) {
  EXPECT_EQ(SelectMostFrequentRelation({{"used-for", 2}, {"part-of", 1}}), "used-for");
  EXPECT_EQ(SelectMostFrequentRelation({{"used-for", 1}}), "used-for");
  EXPECT_EQ(SelectMostFrequentRelation({{"compare", 1}, {"part-of", 1}}), "compare");
}

TEST(CentroidTest, Examples) {
  EmbeddingTable table = MakeTable(2, {{"uses", {1, 0}}, {"utilizes", {0.9, 0.1}},
                                       {"supports", {0, 1}}, {"improves", {1, 1}}});
  EXPECT_EQ(SelectCentroidVerb({{"uses", 1}, {"utilizes", 1}}, table).label, "uses");
  EXPECT_EQ(SelectCentroidVerb({{"improves", 3}}, table).label, "improves");
  EmbeddingTable partial = MakeTable(2, {{"supports", {0, 1}}});
  CentroidChoice c = SelectCentroidVerb({{"uses", 5}, {"supports", 1}}, partial);
  EXPECT_EQ(c.label, "supports");
  EXPECT_FALSE(c.fallback);
}

TEST(CentroidTest, FallsBackToMostFrequent) {
  EmbeddingTable empty(2);
  CentroidChoice c = SelectCentroidVerb({{"uses", 1}, {"adopts", 3}}, empty);
  EXPECT_EQ(c.label, "adopts");
  EXPECT_TRUE(c.fallback);
}

TEST(CentroidTest, MultiplicityWeightsTheMean) {
  EmbeddingTable table = MakeTable(2, {{"a", {1, 0}}, {"b", {0, 1}}, {"c", {0.6, 0.8}}});
  // Mean of 3a + b points near a; with b weighted up it moves toward c.
  EXPECT_EQ(SelectCentroidVerb({{"a", 3}, {"b", 1}}, table).label, "a");
  EXPECT_EQ(SelectCentroidVerb({{"a", 1}, {"b", 3}, {"c", 1}}, table).label, "c");
}

// Property: uniform positive scaling of the table never changes the choice.
TEST(CentroidTest, ScaleInvariant) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_real_distribution<double> scale(0.01, 100);
  for (int trial = 0; trial < 500; ++trial) {
    int dim = 2 + static_cast<int>(rng() % 6);
    int n = 1 + static_cast<int>(rng() % 6);
    double k = scale(rng);
    EmbeddingTable a(dim), b(dim);
    RelationCounts counts;
    for (int i = 0; i < n; ++i) {
      std::vector<double> v(dim), w(dim);
      for (int j = 0; j < dim; ++j) {
        v[j] = u(rng);
        w[j] = v[j] * k;
      }
      std::string label = "v" + std::to_string(i);
      a.Add(label, v);
      b.Add(label, w);
      counts[label] = 1 + static_cast<int>(rng() % 3);
    }
    EXPECT_EQ(SelectCentroidVerb(counts, a).label, SelectCentroidVerb(counts, b).label);
  }
}

TEST(CollapseTest, OneRelationPerPairAndSource) {
  CorpusState c;
  c.ef[{"a", "used-for", "b"}].occurrences = {{"d1", 2}};
  c.ef[{"a", "part-of", "b"}].occurrences = {{"d2", 1}};
  c.oie[{"a", "uses", "b"}].occurrences = {{"d1", 1}};
  c.oie[{"a", "utilizes", "b"}].occurrences = {{"d3", 1}};
  c.pos[{"b", "improves", "a"}].occurrences = {{"d4", 1}};
  EmbeddingTable table = MakeTable(2, {{"uses", {1, 0}}, {"utilizes", {0.9, 0.1}}});
  std::vector<std::string> log;
  CorpusState out = CollapseRelations(c, table, &log);
  ASSERT_EQ(out.ef.size(), 1u);
  EXPECT_EQ(out.ef.begin()->first.relation, "used-for");
  EXPECT_EQ(out.ef.begin()->second.DocIds(), (DocSet{"d1", "d2"}));
  ASSERT_EQ(out.oie.size(), 1u);
  EXPECT_EQ(out.oie.begin()->first.relation, "uses");
  EXPECT_EQ(out.oie.begin()->second.DocIds(), (DocSet{"d1", "d3"}));
  ASSERT_EQ(out.pos.size(), 1u);
  // "improves" has no embedding: the most-frequent fallback is logged.
  EXPECT_EQ(out.pos.begin()->first.relation, "improves");
  EXPECT_FALSE(log.empty());
}

// Property: surviving pairs equal the distinct input pairs per source.
TEST(CollapseTest, PairCountsPreserved) {
  std::mt19937_64 rng(67);
  const std::vector<std::string> ents = {"a", "b", "c", "d"};
  const std::vector<std::string> rels = {"uses", "utilizes", "improves", "limits"};
  EmbeddingTable table = MakeTable(2, {{"uses", {1, 0}}, {"utilizes", {0.9, 0.1}},
                                       {"improves", {0, 1}}, {"limits", {-1, 0.2}}});
  for (int trial = 0; trial < 200; ++trial) {
    CorpusState c;
    for (int i = 0; i < 10; ++i) {
      std::string s = ents[rng() % 4], o = ents[rng() % 4];
      if (s == o) continue;
      TripleTable &t = c.Table(static_cast<TripleSource>(rng() % 3));
      t[{s, rels[rng() % 4], o}].occurrences["d" + std::to_string(rng() % 3)] += 1;
    }
    CorpusState out = CollapseRelations(c, table);
    for (TripleSource src : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
      std::set<EntityPair> in_pairs, out_pairs;
      int in_occ = 0, out_occ = 0;
      for (const auto &[t, r] : c.Table(src)) {
        in_pairs.insert(PairOf(t));
        in_occ += r.TotalOccurrences();
      }
      for (const auto &[t, r] : out.Table(src)) {
        EXPECT_TRUE(out_pairs.insert(PairOf(t)).second);
        out_occ += r.TotalOccurrences();
      }
      EXPECT_EQ(in_pairs, out_pairs);
      EXPECT_EQ(in_occ, out_occ);
    }
  }
}

}  // namespace
}  // namespace scikg
