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

#ifndef SCIKG_PIPELINE_H_
#define SCIKG_PIPELINE_H_

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scikg/config.h"
#include "scikg/error.h"
#include "scikg/graph.h"

namespace scikg {

enum class Stage {
  kIngest,
  kIntegrate,
  kRefine,
  kMerge,
  kCollapse,
  kMap,
  kSelect,
  kEnhance,
  kSerialize,
};

inline constexpr Stage kAllStages[] = {Stage::kIngest,   Stage::kIntegrate, Stage::kRefine,
                                       Stage::kMerge,    Stage::kCollapse,  Stage::kMap,
                                       Stage::kSelect,   Stage::kEnhance,   Stage::kSerialize};

std::string_view ToString(Stage stage);
std::optional<Stage> ParseStage(std::string_view name);

// Main checkpoint written by a stage, relative to the output directory.
std::string_view CheckpointName(Stage stage);

// Error raised inside a stage; what() starts with "<stage>: ".
class StageError : public Error {
 public:
  StageError(Stage stage, const std::string &what)
      : Error(std::string(ToString(stage)) + ": " + what), stage_(stage) {}
  Stage stage() const { return stage_; }

 private:
  Stage stage_;
};

struct RunOptions {
  // Stop after this stage.
  std::optional<Stage> last_stage;
  // Resume after the latest checkpoint found in this directory.
  std::string from_checkpoint;
};

struct RunResult {
  std::optional<Stage> first_stage;  // unset when nothing was left to run
  Stage last_stage = Stage::kIngest;
  std::string summary;               // empty unless serialize ran
};

// Runs the pipeline, writing checkpoints and final artifacts into
// config.output_dir. Throws StageError.
RunResult RunPipeline(const PipelineConfig &config, const RunOptions &options = {});

// Summary text for a finished graph: entity count, triple counts per source
// and the support histogram per source group.
std::string SummarizeGraph(const TripleSet &graph);

// Predicted triple sets for the evaluation rows, keyed by method name, in
// report order.
std::vector<std::pair<std::string, std::set<Triple>>> MethodTripleSets(const TripleSet &graph);

// Checkpoint and artifact file names.
inline constexpr char kMergeLogFile[] = "04-merge-decisions.tsv";
inline constexpr char kClustersFile[] = "06-clusters.tsv";
inline constexpr char kRelationMapFile[] = "06-relation-map.tsv";
inline constexpr char kClassifierFile[] = "07-classifier.txt";
inline constexpr char kGateFile[] = "07-gate-decisions.tsv";
inline constexpr char kNTriplesFile[] = "graph.nt";
inline constexpr char kProvenanceFile[] = "graph.provenance.jsonl";
inline constexpr char kSummaryFile[] = "summary.txt";
inline constexpr char kEvaluationFile[] = "evaluation.tsv";
inline constexpr char kLogFile[] = "pipeline.log";

}  // namespace scikg

#endif  // SCIKG_PIPELINE_H_
