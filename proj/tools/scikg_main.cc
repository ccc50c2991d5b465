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

// Command-line front end for the knowledge graph pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "scikg/annotations.h"
#include "scikg/clustering.h"
#include "scikg/config.h"
#include "scikg/corpus.h"
#include "scikg/embeddings.h"
#include "scikg/evaluate.h"
#include "scikg/graph.h"
#include "scikg/pipeline.h"
#include "scikg/relation_map.h"
#include "scikg/resources.h"

namespace fs = std::filesystem;

namespace {

using namespace scikg;

CorpusState ReadCorpusFile(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadCorpus(in, path.string());
}

void WriteOutput(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) throw Error("cannot write " + path);
}

struct RunFlags {
  std::string config;
  std::string stage;
  std::string from_checkpoint;
  std::string output_dir;
  std::optional<uint64_t> seed;
  std::optional<int> min_support;
  std::optional<double> silhouette_target;
  std::optional<double> gate_threshold;
};

int Run(const RunFlags &flags) {
  PipelineConfig config;
  try {
    config = LoadPipelineConfig(flags.config);
  } catch (const std::exception &e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return 2;
  }
  if (flags.seed) config.classifier.seed = *flags.seed;
  if (flags.min_support) config.min_support = *flags.min_support;
  if (flags.silhouette_target) config.silhouette_target = *flags.silhouette_target;
  if (flags.gate_threshold) config.gate_threshold = *flags.gate_threshold;
  if (!flags.output_dir.empty()) config.output_dir = flags.output_dir;

  RunOptions options;
  options.from_checkpoint = flags.from_checkpoint;
  if (!flags.stage.empty()) {
    options.last_stage = ParseStage(flags.stage);
    if (!options.last_stage) {
      std::cerr << "error: unknown stage '" << flags.stage << "'\n";
      return 2;
    }
  }
  try {
    RunResult result = RunPipeline(config, options);
    if (!result.first_stage) {
      std::cerr << "nothing to do: checkpoint already complete\n";
    } else {
      std::cerr << "stages " << ToString(*result.first_stage) << ".." << ToString(result.last_stage)
                << " done; output in " << config.output_dir << '\n';
    }
    std::cout << result.summary;
  } catch (const StageError &e) {
    std::cerr << "error: stage " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int ExportClusters(const std::string &config_path, const std::string &checkpoint,
                   const std::string &output) {
  PipelineConfig config = LoadPipelineConfig(config_path);
  CorpusState corpus = ReadCorpusFile(fs::path(checkpoint) / CheckpointName(Stage::kCollapse));
  std::set<std::string> verbs;
  for (TripleSource s : {TripleSource::kOIE, TripleSource::kPOS}) {
    for (const auto &[t, record] : corpus.Table(s)) verbs.insert(t.relation);
  }
  EmbeddingTable embeddings = LoadEmbeddings(config.embeddings);
  std::vector<std::string> log;
  ClusterPartition partition =
      ClusterRelations({verbs.begin(), verbs.end()}, embeddings, config.silhouette_target, &log);
  for (const std::string &line : log) std::cerr << line << '\n';
  RelationMap map = BuildRelationMap(partition, embeddings, {}, {});
  std::ostringstream out;
  ExportRelationClusters(partition, map, out);
  WriteOutput(output, out.str());
  return 0;
}

int ImportMap(const std::string &input, const std::string &checkpoint, const std::string &output) {
  LabelPairs pairs = LoadRelationMapFile(input);
  std::set<std::string> known;
  if (!checkpoint.empty()) {
    CorpusState corpus = ReadCorpusFile(fs::path(checkpoint) / CheckpointName(Stage::kCollapse));
    for (TripleSource s : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
      for (const auto &[t, record] : corpus.Table(s)) known.insert(t.relation);
    }
  }
  std::vector<std::string> warnings;
  pairs = ImportCuratedMap(pairs, known, checkpoint.empty() ? nullptr : &warnings);
  for (const std::string &w : warnings) std::cerr << "warning: " << w << '\n';
  std::ostringstream out;
  for (const auto &[verb, rep] : pairs) out << verb << '\t' << rep << '\n';
  WriteOutput(output, out.str());
  std::cerr << pairs.size() << " curated entries accepted\n";
  return 0;
}

int EvaluateCommand(const std::string &gold_path, const std::string &provenance,
                    const std::string &triples, const std::string &method,
                    const std::string &output) {
  std::vector<GoldStandardEntry> gold = LoadGoldStandard(gold_path);
  std::string report;
  if (!provenance.empty()) {
    std::ifstream in(provenance);
    if (!in) throw Error("cannot open " + provenance);
    TripleSet graph = ReadProvenance(in, provenance);
    for (const auto &[name, set] : MethodTripleSets(graph)) {
      report += FormatReportRow(name, Evaluate(set, gold)) + '\n';
    }
  } else {
    std::vector<Triple> list = LoadTripleList(triples);
    std::set<Triple> predicted(list.begin(), list.end());
    report = FormatReportRow(method, Evaluate(predicted, gold)) + '\n';
  }
  WriteOutput(output, report);
  return 0;
}

int ExportCorpus(const std::string &checkpoint, const std::string &output) {
  fs::path dir(checkpoint);
  std::vector<SentenceAnnotation> sentences =
      LoadSentenceAnnotations((dir / CheckpointName(Stage::kIngest)).string());
  CorpusState corpus = ReadCorpusFile(dir / CheckpointName(Stage::kMerge));
  std::ostringstream out;
  ExportUnderscoredCorpus(sentences, corpus.EntityUniverse(), out);
  WriteOutput(output, out.str());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Builds a scientific knowledge graph from per-sentence extraction records."};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App *run = app.add_subcommand("run", "Run the pipeline");
  run->add_option("--config", run_flags.config, "Pipeline config file")->required();
  run->add_option("--stage", run_flags.stage, "Stop after this stage");
  run->add_option("--from-checkpoint", run_flags.from_checkpoint,
                  "Resume after the latest checkpoint in this directory");
  run->add_option("--output-dir", run_flags.output_dir, "Override output_dir");
  run->add_option("--seed", run_flags.seed, "Classifier seed");
  run->add_option("--min-support", run_flags.min_support, "Minimum support for POS triples");
  run->add_option("--silhouette-target", run_flags.silhouette_target, "Clustering cut target");
  run->add_option("--gate-threshold", run_flags.gate_threshold, "Consistency gate threshold");

  std::string config_path, checkpoint, output, input, gold, provenance, triples;
  std::string method = "predicted";
  CLI::App *export_clusters =
      app.add_subcommand("export-clusters", "Write the relation clusters as a curation file");
  export_clusters->add_option("--config", config_path, "Pipeline config file")->required();
  export_clusters->add_option("--from-checkpoint", checkpoint, "Directory with 05-collapse.jsonl")
      ->required();
  export_clusters->add_option("--output", output, "Output file (default stdout)");

  CLI::App *import_map = app.add_subcommand("import-map", "Validate a curated relation map");
  import_map->add_option("--input", input, "Curated map TSV")->required();
  import_map->add_option("--from-checkpoint", checkpoint,
                         "Directory with 05-collapse.jsonl, used to flag unknown verbs");
  import_map->add_option("--output", output, "Write the validated map here");

  CLI::App *evaluate = app.add_subcommand("evaluate", "Score triples against a gold standard");
  evaluate->add_option("--gold", gold, "Gold standard TSV")->required();
  auto *prov_opt = evaluate->add_option("--provenance", provenance,
                                        "Provenance sidecar; one row per method combination");
  auto *triples_opt = evaluate->add_option("--triples", triples, "Triple TSV; a single row");
  prov_opt->excludes(triples_opt);
  evaluate->add_option("--method", method, "Row name for --triples");
  evaluate->add_option("--output", output, "Output file (default stdout)");

  CLI::App *export_corpus =
      app.add_subcommand("export-corpus", "Write sentences with multi-word entities underscored");
  export_corpus->add_option("--from-checkpoint", checkpoint,
                            "Directory with 01-ingest.jsonl and 04-merge.jsonl")
      ->required();
  export_corpus->add_option("--output", output, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return Run(run_flags);
    if (export_clusters->parsed()) return ExportClusters(config_path, checkpoint, output);
    if (import_map->parsed()) return ImportMap(input, checkpoint, output);
    if (evaluate->parsed()) {
      if (provenance.empty() && triples.empty()) {
        std::cerr << "error: evaluate needs --provenance or --triples\n";
        return 2;
      }
      return EvaluateCommand(gold, provenance, triples, method, output);
    }
    if (export_corpus->parsed()) return ExportCorpus(checkpoint, output);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
