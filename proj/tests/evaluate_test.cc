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
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/error.h"
#include "scikg/evaluate.h"
#include "scikg/resources.h"

namespace scikg {
namespace {

Triple T(int i) { return {"s" + std::to_string(i), "uses", "o" + std::to_string(i)}; }

TEST(EvaluateTest, HandExample) {
  std::vector<GoldStandardEntry> gold = {{T(1), true}, {T(2), true}, {T(3), true},
                                         {T(5), true}, {T(4), false}};
  EvaluationReport r = Evaluate({T(1), T(2), T(3), T(4), T(9)}, gold);
  EXPECT_EQ(r.tp, 3);
  EXPECT_EQ(r.fp, 1);
  EXPECT_EQ(r.fn, 1);
  EXPECT_DOUBLE_EQ(r.precision, 0.75);
  EXPECT_DOUBLE_EQ(r.recall, 0.75);
  EXPECT_DOUBLE_EQ(r.fmeasure, 0.75);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(FormatReportRow("EF", r), "EF\t0.7500\t0.7500\t0.7500\t3\t1\t1");
}

TEST(EvaluateTest, PerfectAndDegenerate) {
  std::vector<GoldStandardEntry> gold = {{T(1), true}, {T(2), true}};
  EvaluationReport perfect = Evaluate({T(1), T(2)}, gold);
  EXPECT_EQ(perfect.precision, 1.0);
  EXPECT_EQ(perfect.recall, 1.0);
  EXPECT_EQ(perfect.fmeasure, 1.0);
  EvaluationReport none = Evaluate({}, gold);
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.fmeasure, 0.0);
  EXPECT_TRUE(none.degenerate);
  EXPECT_THROW(Evaluate({T(1)}, {}), Error);
}

TEST(FMeasureTest, Examples) {
  EXPECT_NEAR(FMeasure(0.8429, 0.5443), 0.6615, 0.0005);
  EXPECT_NEAR(FMeasure(0.8279, 0.6506), 0.7286, 0.0005);
  EXPECT_EQ(FMeasure(1, 1), 1.0);
  EXPECT_EQ(FMeasure(0, 0.5), 0.0);
  EXPECT_EQ(FMeasure(0.5, 0), 0.0);
}

// Property: min(P, R) <= F <= max(P, R) for positive inputs.
TEST(FMeasureTest, BetweenPrecisionAndRecall) {
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> u(1e-6, 1);
  for (int i = 0; i < 10000; ++i) {
    double p = u(rng), r = u(rng);
    double f = FMeasure(p, r);
    EXPECT_GE(f, std::min(p, r) - 1e-15);
    EXPECT_LE(f, std::max(p, r) + 1e-15);
    EXPECT_GT(f, 0);
  }
}

// Property: set semantics; order and duplicates of the input do not matter.
TEST(EvaluateTest, OrderAndDuplicatesIrrelevant) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<GoldStandardEntry> gold;
    for (int i = 0; i < 30; ++i) gold.push_back({T(i), rng() % 3 != 0});
    std::vector<Triple> predicted;
    for (int i = 0; i < 40; ++i) predicted.push_back(T(static_cast<int>(rng() % 45)));
    EvaluationReport a = Evaluate({predicted.begin(), predicted.end()}, gold);
    std::shuffle(gold.begin(), gold.end(), rng);
    std::reverse(predicted.begin(), predicted.end());
    predicted.insert(predicted.end(), predicted.begin(), predicted.begin() + 10);
    EvaluationReport b = Evaluate({predicted.begin(), predicted.end()}, gold);
    EXPECT_EQ(a.tp, b.tp);
    EXPECT_EQ(a.fp, b.fp);
    EXPECT_EQ(a.fn, b.fn);
    EXPECT_EQ(a.fmeasure, b.fmeasure);
  }
}

TEST(GoldUniverseTest, DetectsStrayTriples) {
  std::vector<GoldStandardEntry> gold = {{T(1), true}, {T(2), false}, {T(3), true}};
  GoldUniverseReport ok = CheckGoldUniverse(gold, {{"EF", {T(1), T(2)}}, {"OIE", {T(2)}}});
  EXPECT_TRUE(ok.ok());
  EXPECT_EQ(ok.unique_triples, 3u);
  EXPECT_EQ(ok.true_triples, 2u);
  EXPECT_EQ(ok.membership_sum, 3u);
  EXPECT_EQ(ok.unclaimed, 1u);
  GoldUniverseReport bad = CheckGoldUniverse(gold, {{"EF", {T(1), T(7)}}});
  EXPECT_FALSE(bad.ok());
}

}  // namespace
}  // namespace scikg
