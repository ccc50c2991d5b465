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

#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/classifier.h"
#include "scikg/error.h"

namespace scikg {
namespace {

// Two Gaussian blobs around opposite centers in `dim` dimensions.
std::vector<TrainingExample> Blobs(int n, int dim, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 0.3);
  std::vector<TrainingExample> out;
  for (int i = 0; i < n; ++i) {
    TrainingExample e;
    e.label = i % 2;
    e.input.resize(dim);
    for (int j = 0; j < dim; ++j) e.input[j] = g(rng) + ((j % 2 == e.label) ? 1.0 : -1.0);
    out.push_back(e);
  }
  return out;
}

ClassifierParams Small() {
  ClassifierParams p;
  p.hidden_units = 16;
  p.max_epochs = 60;
  p.seed = 5;
  return p;
}

TEST(ClassifierTest, OutputIsDistribution) {
  ConsistencyClassifier clf(6, 4, {"a", "b", "c"}, 1);
  std::vector<double> x = {0.1, -0.2, 0.3, 0.0, 1.0, -1.0};
  auto p = clf.Predict(x);
  ASSERT_EQ(p.size(), 3u);
  for (double v : p) EXPECT_GE(v, 0.0);
  EXPECT_NEAR(std::accumulate(p.begin(), p.end(), 0.0), 1.0, 1e-12);
}

TEST(ClassifierTest, RejectsBadTrainingInput) {
  ClassifierParams p = Small();
  EXPECT_THROW(ConsistencyClassifier::Train({}, {"a", "b"}, p), Error);
  auto blobs = Blobs(10, 4, 1);
  EXPECT_THROW(ConsistencyClassifier::Train(blobs, {"a"}, p), Error);
  for (auto &e : blobs) e.label = 0;
  EXPECT_THROW(ConsistencyClassifier::Train(blobs, {"a", "b"}, p), Error);
  auto ragged = Blobs(10, 4, 1);
  ragged[3].input.pop_back();
  EXPECT_THROW(ConsistencyClassifier::Train(ragged, {"a", "b"}, p), Error);
}

TEST(ClassifierTest, LearnsSeparableBlobs) {
  TrainingSummary summary;
  auto blobs = Blobs(200, 20, 2);
  ConsistencyClassifier clf = ConsistencyClassifier::Train(blobs, {"a", "b"}, Small(), &summary);
  EXPECT_GE(summary.training_accuracy, 0.95);
  EXPECT_GT(summary.epochs, 0);
  int correct = 0;
  for (const auto &e : blobs) correct += clf.PredictClass(e.input) == e.label;
  EXPECT_DOUBLE_EQ(correct / 200.0, summary.training_accuracy);
}

TEST(ClassifierTest, SeededRunsAreBitIdentical) {
  auto blobs = Blobs(100, 10, 3);
  auto a = ConsistencyClassifier::Train(blobs, {"a", "b"}, Small());
  auto b = ConsistencyClassifier::Train(blobs, {"a", "b"}, Small());
  EXPECT_TRUE(a == b);
  ClassifierParams other = Small();
  other.seed = 6;
  EXPECT_FALSE(a == ConsistencyClassifier::Train(blobs, {"a", "b"}, other));
}

TEST(ClassifierTest, SaveLoadIsExact) {
  auto clf = ConsistencyClassifier::Train(Blobs(50, 8, 4), {"improves", "uses"}, Small());
  std::stringstream buf;
  clf.Save(buf);
  ConsistencyClassifier back = ConsistencyClassifier::Load(buf);
  EXPECT_TRUE(back == clf);
  EXPECT_EQ(back.labels(), clf.labels());
  std::stringstream again;
  back.Save(again);
  std::stringstream first;
  clf.Save(first);
  EXPECT_EQ(again.str(), first.str());
  std::istringstream bad("not a checkpoint\n");
  EXPECT_THROW(ConsistencyClassifier::Load(bad), Error);
}

}  // namespace
}  // namespace scikg
