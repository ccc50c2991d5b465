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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/clustering.h"
#include "scikg/embeddings.h"
#include "scikg/error.h"
#include "scikg/relation_map.h"
#include "test_util.h"

namespace scikg {
namespace {

using testing::DataPath;

// Textbook element silhouette, written independently of the library.
double BruteSilhouette(const std::vector<int> &assign, const DistanceMatrix &d) {
  size_t n = assign.size();
  double total = 0;
  for (size_t i = 0; i < n; ++i) {
    std::map<int, std::pair<double, int>> by_cluster;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      auto &acc = by_cluster[assign[j]];
      acc.first += d[i][j];
      acc.second += 1;
    }
    if (by_cluster.count(assign[i]) == 0) continue;  // singleton: 0
    double a = by_cluster[assign[i]].first / by_cluster[assign[i]].second;
    double b = INFINITY;
    for (const auto &[c, acc] : by_cluster) {
      if (c != assign[i]) b = std::min(b, acc.first / acc.second);
    }
    double m = std::max(a, b);
    total += m > 0 ? (b - a) / m : 0;
  }
  return total / static_cast<double>(n);
}

std::vector<Vector> Vectors(const EmbeddingTable &t, const std::vector<std::string> &labels) {
  std::vector<Vector> out;
  for (const auto &l : labels) {
    auto v = t.Find(l);
    out.emplace_back(v->begin(), v->end());
  }
  return out;
}

// Two tight orthogonal pairs, [1,0] +- eps and [0,1] +- eps. With three or
// more members a group can shed a singleton and still clear the target, so
// the finest-partition rule would split it.
EmbeddingTable TwoGroups() {
  return testing::MakeTable(2, {{"uses", {1, 0.02}},
                                {"adopts", {1, -0.03}},
                                {"improves", {0.01, 1}},
                                {"enhances", {-0.02, 1}}});
}

TEST(SilhouetteTest, MatchesBruteForce) {
  std::mt19937_64 rng(71);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 100; ++trial) {
    int n = 3 + static_cast<int>(rng() % 8);
    std::vector<Vector> vs(n, Vector(4));
    for (auto &v : vs) {
      for (auto &x : v) x = g(rng);
    }
    DistanceMatrix d = CosineDistances(vs);
    std::vector<int> assign(n);
    for (auto &a : assign) a = static_cast<int>(rng() % 3);
    if (std::count(assign.begin(), assign.end(), assign[0]) == n) assign[0] = assign[0] + 1;
    auto s = ElementSilhouettes(assign, d);
    double mean = 0;
    for (double x : s) {
      EXPECT_GE(x, -1.0);
      EXPECT_LE(x, 1.0);
      mean += x;
    }
    EXPECT_NEAR(mean / n, BruteSilhouette(assign, d), 1e-12);
  }
}

TEST(SilhouetteTest, SingletonScoresZeroAndOneClusterThrows) {
  DistanceMatrix d = {{0, 0.1, 0.9}, {0.1, 0, 0.8}, {0.9, 0.8, 0}};
  auto s = ElementSilhouettes({0, 0, 2}, d);
  EXPECT_EQ(s[2], 0.0);
  EXPECT_THROW(ElementSilhouettes({0, 0, 0}, d), Error);
}

TEST(AgglomerativeTest, PathFromSingletonsToOne) {
  std::vector<Vector> vs = {{1, 0}, {0.9, 0.1}, {0, 1}, {0.1, 0.9}};
  auto path = AgglomerativePartitions(CosineDistances(vs));
  ASSERT_EQ(path.size(), 4u);
  EXPECT_EQ(path[0], (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(path[2], (std::vector<int>{0, 0, 2, 2}));
  EXPECT_EQ(path[3], (std::vector<int>{0, 0, 0, 0}));
}

TEST(ClusterRelationsTest, TwoOrthogonalGroups) {
  EmbeddingTable t = TwoGroups();
  std::vector<std::string> labels = {"uses", "adopts", "improves", "enhances"};
  ClusterPartition p = ClusterRelations(labels, t, 0.65);
  ASSERT_EQ(p.clusters.size(), 2u);
  EXPECT_EQ(p.clusters[0], (std::vector<std::string>{"adopts", "uses"}));
  EXPECT_EQ(p.clusters[1], (std::vector<std::string>{"enhances", "improves"}));
  ASSERT_TRUE(p.average.has_value());
  EXPECT_GT(*p.average, 0.9);
  EXPECT_TRUE(p.reached_target);
  // Brute force over every 2-partition: the planted one scores best and the
  // reported average matches the formula.
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  DistanceMatrix d = CosineDistances(Vectors(t, sorted));
  double best = -2;
  std::vector<int> best_assign;
  for (int mask = 1; mask < (1 << 3); ++mask) {
    std::vector<int> assign(4, 0);
    for (int i = 0; i < 3; ++i) assign[i + 1] = (mask >> i) & 1;
    double s = BruteSilhouette(assign, d);
    if (s > best) {
      best = s;
      best_assign = assign;
    }
  }
  EXPECT_NEAR(*p.average, best, 1e-9);
  // sorted: adopts enhances improves uses
  EXPECT_EQ(best_assign, (std::vector<int>{0, 1, 1, 0}));
}

TEST(ClusterRelationsTest, TwoLabelsFormOneCluster) {
  EmbeddingTable t = testing::MakeTable(2, {{"a", {1, 0}}, {"b", {0, 1}}});
  ClusterPartition p = ClusterRelations({"a", "b"}, t, 0.65);
  ASSERT_EQ(p.clusters.size(), 1u);
  EXPECT_EQ(p.clusters[0], (std::vector<std::string>{"a", "b"}));
  EXPECT_FALSE(p.average.has_value());
  EXPECT_FALSE(p.reached_target);
}

TEST(ClusterRelationsTest, FewerThanTwoEmbeddable) {
  EmbeddingTable t = testing::MakeTable(2, {{"a", {1, 0}}});
  std::vector<std::string> log;
  ClusterPartition p = ClusterRelations({"a", "missing"}, t, 0.65, &log);
  ASSERT_EQ(p.clusters.size(), 1u);
  EXPECT_EQ(p.clusters[0], std::vector<std::string>{"a"});
  EXPECT_FALSE(p.average.has_value());
  EXPECT_FALSE(log.empty());
}

TEST(ClusterRelationsTest, DuplicateGroupsScoreOne) {
  // Directions repeated at different scales are at distance 0.
  std::vector<Vector> vs = {{1, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 3, 0}, {0, 0, 1}, {0, 0, 5}};
  auto s = ElementSilhouettes({0, 0, 1, 1, 2, 2}, CosineDistances(vs));
  for (double x : s) EXPECT_NEAR(x, 1.0, 1e-9);

  EmbeddingTable t = testing::MakeTable(
      3, {{"a", {1, 0, 0}}, {"b", {2, 0, 0}}, {"c", {0, 1, 0}}, {"d", {0, 3, 0}}});
  ClusterPartition p = ClusterRelations({"a", "b", "c", "d"}, t, 0.65);
  ASSERT_EQ(p.clusters.size(), 2u);
  EXPECT_NEAR(*p.average, 1.0, 1e-9);
}

// Property: label order does not matter.
TEST(ClusterRelationsTest, OrderInvariant) {
  EmbeddingTable t = LoadEmbeddings(DataPath("verbs50.emb"));
  std::vector<std::string> labels = t.tokens();
  ClusterPartition reference = ClusterRelations(labels, t, 0.65);
  std::mt19937 rng(73);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(labels.begin(), labels.end(), rng);
    ClusterPartition p = ClusterRelations(labels, t, 0.65);
    EXPECT_EQ(p.clusters, reference.clusters);
    EXPECT_EQ(p.average, reference.average);
  }
}

TEST(ClusterRelationsTest, ProducesGroup) {
  EmbeddingTable t = LoadEmbeddings(DataPath("verbs50.emb"));
  std::vector<std::string> verbs = {"builds", "creates", "produces", "develops", "makes",
                                    "constructs"};
  ClusterPartition p = ClusterRelations(verbs, t, 0.65);
  ASSERT_EQ(p.clusters.size(), 1u);
  EXPECT_EQ(ClusterRepresentative(p.clusters[0], t), "produces");
}

}  // namespace
}  // namespace scikg
