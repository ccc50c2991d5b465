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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/config.h"
#include "scikg/graph.h"
#include "scikg/pipeline.h"
#include "scikg/resources.h"
#include "test_util.h"

namespace scikg {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;
using testing::ReadFile;
using testing::TempDir;

PipelineConfig FixtureConfig(const std::string &output_dir) {
  PipelineConfig config = LoadPipelineConfig(DataPath("e2e/pipeline.conf"));
  config.output_dir = output_dir;
  return config;
}

TripleSet ReadGraph(const std::string &dir) {
  std::ifstream in(dir + "/" + kProvenanceFile);
  return ReadProvenance(in, "graph");
}

const std::vector<std::string> kFinalArtifacts = {kNTriplesFile, kProvenanceFile, kSummaryFile,
                                                  kEvaluationFile};

TEST(PipelineTest, FixtureReportMatchesHandComputed) {
  TempDir dir;
  RunResult result = RunPipeline(FixtureConfig(dir.path()));
  EXPECT_EQ(result.first_stage, Stage::kIngest);
  EXPECT_EQ(result.last_stage, Stage::kSerialize);
  EXPECT_FALSE(result.summary.empty());
  EXPECT_EQ(ReadFile(dir.File(kEvaluationFile)), ReadFile(DataPath("e2e/expected_evaluation.tsv")));
  EXPECT_EQ(ReadFile(dir.File(kSummaryFile)), result.summary);
}

TEST(PipelineTest, FixtureGraphMatchesPlantedFacts) {
  TempDir dir;
  RunPipeline(FixtureConfig(dir.path()));
  std::map<Triple, std::string> expected;
  std::istringstream in(ReadFile(DataPath("e2e/expected_graph.tsv")));
  for (std::string line; std::getline(in, line);) {
    std::istringstream f(line);
    Triple t;
    std::string sources;
    std::getline(f, t.subject, '\t');
    std::getline(f, t.relation, '\t');
    std::getline(f, t.object, '\t');
    std::getline(f, sources);
    expected[t] = sources;
  }
  std::map<Triple, std::string> got;
  for (const auto &[t, st] : ReadGraph(dir.path())) {
    if (!st.sources.OnlyInferred()) got[t] = st.sources.ToString();
    // Inferred triples point at a super-topic and never override a fact.
    if (st.sources.OnlyInferred()) EXPECT_EQ(st.support, 0);
  }
  EXPECT_EQ(got, expected);
}

TEST(PipelineTest, RunsAreByteIdentical) {
  TempDir a, b;
  RunPipeline(FixtureConfig(a.path()));
  RunPipeline(FixtureConfig(b.path()));
  size_t compared = 0;
  for (const auto &entry : fs::directory_iterator(a.path())) {
    std::string name = entry.path().filename().string();
    EXPECT_EQ(ReadFile(entry.path().string()), ReadFile(b.File(name))) << name;
    ++compared;
  }
  EXPECT_GE(compared, 15u);
}

TEST(PipelineTest, StopsAfterRequestedStage) {
  TempDir dir;
  RunOptions options;
  options.last_stage = Stage::kMerge;
  RunResult r = RunPipeline(FixtureConfig(dir.path()), options);
  EXPECT_EQ(r.last_stage, Stage::kMerge);
  EXPECT_TRUE(r.summary.empty());
  EXPECT_TRUE(fs::exists(dir.File(std::string(CheckpointName(Stage::kMerge)))));
  EXPECT_TRUE(fs::exists(dir.File(kMergeLogFile)));
  EXPECT_FALSE(fs::exists(dir.File(std::string(CheckpointName(Stage::kCollapse)))));
}

// Resuming after any stage reproduces the artifacts of a full run.
TEST(PipelineTest, ResumeFromEveryCheckpoint) {
  TempDir full;
  RunPipeline(FixtureConfig(full.path()));
  for (Stage stop : kAllStages) {
    if (stop == Stage::kSerialize) continue;
    TempDir partial, resumed;
    RunOptions first;
    first.last_stage = stop;
    RunPipeline(FixtureConfig(partial.path()), first);
    RunOptions second;
    second.from_checkpoint = partial.path();
    RunResult r = RunPipeline(FixtureConfig(resumed.path()), second);
    ASSERT_TRUE(r.first_stage.has_value());
    EXPECT_EQ(static_cast<int>(*r.first_stage), static_cast<int>(stop) + 1) << ToString(stop);
    for (const std::string &name : kFinalArtifacts) {
      EXPECT_EQ(ReadFile(resumed.File(name)), ReadFile(full.File(name)))
          << name << " after " << ToString(stop);
    }
  }
}

TEST(PipelineTest, NothingLeftToResume) {
  TempDir full, again;
  RunPipeline(FixtureConfig(full.path()));
  RunOptions options;
  options.from_checkpoint = full.path();
  RunResult r = RunPipeline(FixtureConfig(again.path()), options);
  EXPECT_FALSE(r.first_stage.has_value());
}

TEST(PipelineTest, MissingEmbeddingsFailsInIngest) {
  TempDir dir;
  PipelineConfig config = FixtureConfig(dir.path());
  config.embeddings = dir.File("missing.emb");
  try {
    RunPipeline(config);
    FAIL() << "expected a stage error";
  } catch (const StageError &e) {
    EXPECT_EQ(e.stage(), Stage::kIngest);
    EXPECT_EQ(std::string(e.what()).rfind("ingest: ", 0), 0u) << e.what();
  }
}

TEST(PipelineTest, LowerMinSupportGivesSupersetOfValid) {
  TempDir low, high;
  RunOptions options;
  options.last_stage = Stage::kSelect;
  PipelineConfig a = FixtureConfig(low.path());
  a.min_support = 1;
  PipelineConfig b = FixtureConfig(high.path());
  b.min_support = 10;
  RunPipeline(a, options);
  RunPipeline(b, options);
  auto keys = [](const std::string &path) {
    std::ifstream in(path);
    std::set<Triple> out;
    for (const auto &[t, st] : ReadProvenance(in, path)) out.insert(t);
    return out;
  };
  std::string name(CheckpointName(Stage::kSelect));
  std::set<Triple> loose = keys(low.File(name)), strict = keys(high.File(name));
  EXPECT_GT(loose.size(), strict.size());
  for (const Triple &t : strict) EXPECT_TRUE(loose.count(t)) << t.subject;
}

TEST(PipelineTest, MethodSetsInReportOrder) {
  TripleSet g;
  auto add = [&](const std::string &s, std::initializer_list<TripleSource> src) {
    Triple t{s, "use", "x"};
    g[t].triple = t;
    g[t].sources = SourceSet(src);
  };
  add("a", {TripleSource::kEF});
  add("b", {TripleSource::kOIE, TripleSource::kPOS});
  add("c", {TripleSource::kCONS});
  add("d", {TripleSource::kINFERRED});
  auto sets = MethodTripleSets(g);
  std::vector<std::string> names;
  for (const auto &[n, s] : sets) names.push_back(n);
  EXPECT_EQ(names, (std::vector<std::string>{"EF", "OpenIE", "PoS", "PoS+Cons", "EF+OpenIE",
                                             "EF+PoS+Cons", "OpenIE+PoS+Cons",
                                             "EF+OpenIE+PoS+Cons"}));
  EXPECT_EQ(sets[2].second.size(), 1u);
  EXPECT_EQ(sets[3].second.size(), 2u);
  EXPECT_EQ(sets[7].second.size(), 3u);
}

}  // namespace
}  // namespace scikg
