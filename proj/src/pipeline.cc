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

#include "scikg/pipeline.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "scikg/annotations.h"
#include "scikg/clustering.h"
#include "scikg/corpus.h"
#include "scikg/evaluate.h"
#include "scikg/integrate.h"
#include "scikg/merge.h"
#include "scikg/ntriples.h"
#include "scikg/refine.h"
#include "scikg/relation_map.h"
#include "scikg/relations.h"
#include "scikg/resources.h"
#include "scikg/select.h"
#include "scikg/taxonomy.h"

namespace scikg {

namespace fs = std::filesystem;

std::string_view ToString(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "ingest";
    case Stage::kIntegrate: return "integrate";
    case Stage::kRefine: return "refine";
    case Stage::kMerge: return "merge";
    case Stage::kCollapse: return "collapse";
    case Stage::kMap: return "map";
    case Stage::kSelect: return "select";
    case Stage::kEnhance: return "enhance";
    case Stage::kSerialize: return "serialize";
  }
  return "";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (Stage s : kAllStages) {
    if (ToString(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view CheckpointName(Stage stage) {
  switch (stage) {
    case Stage::kIngest: return "01-ingest.jsonl";
    case Stage::kIntegrate: return "02-integrate.jsonl";
    case Stage::kRefine: return "03-refine.jsonl";
    case Stage::kMerge: return "04-merge.jsonl";
    case Stage::kCollapse: return "05-collapse.jsonl";
    case Stage::kMap: return "06-mapped.jsonl";
    case Stage::kSelect: return "07-select.jsonl";
    case Stage::kEnhance: return "08-graph.jsonl";
    case Stage::kSerialize: return "graph.nt";
  }
  return "";
}

std::string SummarizeGraph(const TripleSet &graph) {
  std::set<std::string> entities;
  std::map<TripleSource, size_t> per_source;
  for (const auto &[t, st] : graph) {
    entities.insert(t.subject);
    entities.insert(t.object);
    for (TripleSource s : st.sources.Members()) ++per_source[s];
  }
  std::ostringstream out;
  out << "entities\t" << entities.size() << '\n';
  out << "triples\t" << graph.size() << '\n';
  for (TripleSource s : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS,
                         TripleSource::kCONS, TripleSource::kINFERRED}) {
    out << "triples." << ToString(s) << '\t' << per_source[s] << '\n';
  }
  SupportHistogram h = ComputeSupportHistogram(graph);
  auto row = [&](const char *name, const std::map<int, int64_t> &counts) {
    out << "support." << name;
    for (const auto &[support, n] : counts) out << '\t' << support << ':' << n;
    out << '\n';
  };
  row("EF", h.ef);
  row("OIE", h.oie);
  row("POS+CONS", h.pos_cons);
  return out.str();
}

std::vector<std::pair<std::string, std::set<Triple>>> MethodTripleSets(const TripleSet &graph) {
  using S = TripleSource;
  const std::vector<std::pair<std::string, std::vector<S>>> methods = {
      {"EF", {S::kEF}},
      {"OpenIE", {S::kOIE}},
      {"PoS", {S::kPOS}},
      {"PoS+Cons", {S::kPOS, S::kCONS}},
      {"EF+OpenIE", {S::kEF, S::kOIE}},
      {"EF+PoS+Cons", {S::kEF, S::kPOS, S::kCONS}},
      {"OpenIE+PoS+Cons", {S::kOIE, S::kPOS, S::kCONS}},
      {"EF+OpenIE+PoS+Cons", {S::kEF, S::kOIE, S::kPOS, S::kCONS}},
  };
  std::vector<std::pair<std::string, std::set<Triple>>> out;
  for (const auto &[name, sources] : methods) {
    std::set<Triple> triples;
    for (const auto &[t, st] : graph) {
      for (S s : sources) {
        if (st.sources.Has(s)) {
          triples.insert(t);
          break;
        }
      }
    }
    out.emplace_back(name, std::move(triples));
  }
  return out;
}

namespace {

// Inputs loaded on first use, so a resumed run reads only what it needs.
class Resources {
 public:
  explicit Resources(const PipelineConfig &config) : config_(config) {}

  const EmbeddingTable &embeddings() {
    if (!embeddings_) embeddings_ = LoadEmbeddings(config_.embeddings);
    return *embeddings_;
  }
  const TopicOntology &ontology() {
    if (!ontology_) ontology_ = LoadTopicOntology(config_.ontology);
    return *ontology_;
  }
  const LexicalTaxonomy &taxonomy() {
    if (!taxonomy_) taxonomy_ = LoadLexicalTaxonomy(config_.taxonomy);
    return *taxonomy_;
  }
  const std::set<std::string> &stopwords() {
    if (!stopwords_) {
      stopwords_ = config_.stopwords.empty() ? DefaultStopWords() : LoadLabelList(config_.stopwords);
    }
    return *stopwords_;
  }
  const std::set<std::string> &auxiliaries() {
    if (!auxiliaries_) {
      auxiliaries_ = config_.auxiliaries.empty() ? DefaultAuxiliaries()
                                                 : LoadLabelList(config_.auxiliaries);
    }
    return *auxiliaries_;
  }
  const RefinerOptions &refiner() {
    if (refiner_) return *refiner_;
    RefinerOptions options;
    if (!config_.blacklist.empty()) options.blacklist = LoadLabelList(config_.blacklist);
    if (!config_.whitelist.empty()) options.whitelist = LoadLabelList(config_.whitelist);
    for (const std::string &topic : ontology().topics()) options.whitelist.insert(topic);
    for (const std::string &label : options.blacklist) {
      if (options.whitelist.count(label) > 0) {
        throw Error("label '" + label + "' is both blacklisted and whitelisted");
      }
    }
    options.stopwords = stopwords();
    if (!config_.background_in_domain.empty()) {
      if (config_.background_sibling.empty() || config_.background_out_domain.empty()) {
        throw Error("genericity filter needs all three background count tables");
      }
      options.counts = BackgroundCounts{LoadCorpusCounts(config_.background_in_domain),
                                        LoadCorpusCounts(config_.background_sibling),
                                        LoadCorpusCounts(config_.background_out_domain)};
    }
    options.sibling_threshold = config_.sibling_ratio_threshold;
    options.out_domain_threshold = config_.out_domain_ratio_threshold;
    refiner_ = std::move(options);
    return *refiner_;
  }
  LabelPairs curated_map() {
    return config_.curated_map.empty() ? LabelPairs{} : LoadRelationMapFile(config_.curated_map);
  }
  LabelPairs ef_static_map() {
    return config_.ef_static_map.empty() ? DefaultEfStaticMap()
                                         : LoadRelationMapFile(config_.ef_static_map);
  }

 private:
  const PipelineConfig &config_;
  std::optional<EmbeddingTable> embeddings_;
  std::optional<TopicOntology> ontology_;
  std::optional<LexicalTaxonomy> taxonomy_;
  std::optional<std::set<std::string>> stopwords_;
  std::optional<std::set<std::string>> auxiliaries_;
  std::optional<RefinerOptions> refiner_;
};

std::ifstream OpenIn(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

template <typename Writer>
void WriteWith(const fs::path &path, Writer writer) {
  std::ostringstream buf;
  writer(buf);
  WriteFile(path, buf.str());
}

// State handed from one stage to the next.
struct Carry {
  std::vector<SentenceAnnotation> sentences;
  CorpusState corpus;
  TripleSet graph;
};

class Runner {
 public:
  Runner(const PipelineConfig &config, fs::path out_dir)
      : config_(config), out_(std::move(out_dir)), resources_(config) {}

  void Load(Stage completed, const fs::path &dir) {
    carry_.sentences = LoadSentenceAnnotations((dir / CheckpointName(Stage::kIngest)).string());
    fs::path main = dir / CheckpointName(completed);
    if (completed >= Stage::kIntegrate && completed <= Stage::kMap) {
      auto in = OpenIn(main);
      carry_.corpus = ReadCorpus(in, main.string());
    } else if (completed == Stage::kSelect || completed == Stage::kEnhance) {
      auto in = OpenIn(main);
      carry_.graph = ReadProvenance(in, main.string());
    }
  }

  void Run(Stage stage) {
    switch (stage) {
      case Stage::kIngest: Ingest(); break;
      case Stage::kIntegrate: Integrate(); break;
      case Stage::kRefine: Refine(); break;
      case Stage::kMerge: Merge(); break;
      case Stage::kCollapse: Collapse(); break;
      case Stage::kMap: Map(); break;
      case Stage::kSelect: Select(); break;
      case Stage::kEnhance: Enhance(); break;
      case Stage::kSerialize: Serialize(); break;
    }
    if (!log_.empty() || stage == Stage::kIngest) {
      std::ofstream log(out_ / kLogFile, stage == Stage::kIngest ? std::ios::trunc : std::ios::app);
      for (const std::string &line : log_) log << ToString(stage) << '\t' << line << '\n';
      log_.clear();
    }
  }

  const std::string &summary() const { return summary_; }

 private:
  void WriteCorpusCheckpoint(Stage stage) {
    WriteWith(out_ / CheckpointName(stage), [&](std::ostream &o) { WriteCorpus(carry_.corpus, o); });
  }

  void Ingest() {
    carry_.sentences = LoadSentenceAnnotations(config_.annotations);
    resources_.embeddings();
    resources_.ontology();
    resources_.taxonomy();
    resources_.auxiliaries();
    resources_.refiner();
    resources_.curated_map();
    resources_.ef_static_map();
    if (!config_.gold.empty()) LoadGoldStandard(config_.gold);
    WriteWith(out_ / CheckpointName(Stage::kIngest),
              [&](std::ostream &o) { WriteSentenceAnnotations(carry_.sentences, o); });
  }

  void Integrate() {
    std::vector<SentenceExtraction> extractions;
    for (const SentenceAnnotation &s : carry_.sentences) {
      extractions.push_back(
          ExtractSentence(s, resources_.ontology(), resources_.stopwords(), resources_.auxiliaries()));
    }
    carry_.corpus = AggregateCorpus(extractions);
    WriteCorpusCheckpoint(Stage::kIntegrate);
  }

  void Refine() {
    carry_.corpus = RefineCorpus(carry_.corpus, carry_.sentences, resources_.refiner());
    WriteCorpusCheckpoint(Stage::kRefine);
  }

  void Merge() {
    MergeResult merged = ApplyMerging(carry_.corpus, LemmaLexicon::Build(carry_.sentences),
                                      resources_.ontology());
    carry_.corpus = std::move(merged.corpus);
    WriteCorpusCheckpoint(Stage::kMerge);
    WriteWith(out_ / kMergeLogFile,
              [&](std::ostream &o) { WriteMergeDecisions(merged.decisions, o); });
  }

  void Collapse() {
    carry_.corpus = CollapseRelations(carry_.corpus, resources_.embeddings(), &log_);
    WriteCorpusCheckpoint(Stage::kCollapse);
  }

  void Map() {
    std::set<std::string> verbs;
    for (TripleSource s : {TripleSource::kOIE, TripleSource::kPOS}) {
      for (const auto &[t, record] : carry_.corpus.Table(s)) verbs.insert(t.relation);
    }
    std::set<std::string> known = verbs;
    for (const auto &[t, record] : carry_.corpus.ef) known.insert(t.relation);

    ClusterPartition partition =
        ClusterRelations({verbs.begin(), verbs.end()}, resources_.embeddings(),
                         config_.silhouette_target, &log_);
    LabelPairs curated = ImportCuratedMap(resources_.curated_map(), known, &log_);
    RelationMap computed =
        BuildRelationMap(partition, resources_.embeddings(), {}, resources_.ef_static_map());
    RelationMap map = BuildRelationMap(partition, resources_.embeddings(), curated,
                                       resources_.ef_static_map());
    std::set<std::string> unmapped;
    carry_.corpus = ApplyRelationMap(carry_.corpus, map, &unmapped);
    for (const std::string &label : unmapped) log_.push_back("unmapped relation '" + label + "'");

    WriteWith(out_ / kClustersFile,
              [&](std::ostream &o) { ExportRelationClusters(partition, computed, o); });
    WriteWith(out_ / kRelationMapFile, [&](std::ostream &o) { WriteRelationMap(map, o); });
    WriteCorpusCheckpoint(Stage::kMap);
  }

  void Select() {
    ValidityPartition partition = ComposeValid(carry_.corpus, config_.min_support);
    const EmbeddingTable &table = resources_.embeddings();
    TrainingSet training = BuildTrainingSet(partition.valid, table);
    for (const Triple &t : training.skipped) {
      log_.push_back("no embedding for (" + t.subject + ", " + t.relation + ", " + t.object +
                     "); not used for training");
    }
    carry_.graph = partition.valid;
    std::ostringstream gate;
    if (partition.invalid.empty()) {
      log_.push_back("no invalid triples; classifier not trained");
    } else if (training.labels.size() < 2) {
      log_.push_back("fewer than two relation classes among valid triples; invalid triples dropped");
    } else {
      ConsistencyClassifier classifier =
          ConsistencyClassifier::Train(training.examples, training.labels, config_.classifier);
      WriteWith(out_ / kClassifierFile, [&](std::ostream &o) { classifier.Save(o); });
      ValidationResult result = ValidateInvalid(partition.invalid, classifier, table,
                                                resources_.taxonomy(), config_.gate_threshold);
      for (const GateDecision &d : result.decisions) {
        gate << d.triple.subject << '\t' << d.triple.relation << '\t' << d.triple.object << '\t';
        if (!d.predicted) {
          gate << "-\tUNEMBEDDABLE\n";
          continue;
        }
        char scores[96];
        std::snprintf(scores, sizeof(scores), "%.6f\t%.6f\t%.6f", d.score.cosine,
                      d.score.wu_palmer, d.score.average);
        gate << *d.predicted << '\t' << (d.score.admitted ? "ADMIT" : "REJECT") << '\t' << scores
             << '\n';
      }
      for (auto &[t, st] : result.admitted) carry_.graph.emplace(t, std::move(st));
    }
    WriteFile(out_ / kGateFile, gate.str());
    WriteWith(out_ / CheckpointName(Stage::kSelect),
              [&](std::ostream &o) { WriteProvenance(carry_.graph, o); });
  }

  void Enhance() {
    TripleSet inferred =
        EnhanceWithSupertopics(carry_.graph, resources_.ontology(), config_.infer_to_fixpoint);
    for (auto &[t, st] : inferred) carry_.graph.emplace(t, std::move(st));
    WriteWith(out_ / CheckpointName(Stage::kEnhance),
              [&](std::ostream &o) { WriteProvenance(carry_.graph, o); });
  }

  void Serialize() {
    WriteFile(out_ / kNTriplesFile, SerializeNTriples(carry_.graph, config_.base_iri));
    WriteWith(out_ / kProvenanceFile, [&](std::ostream &o) { WriteProvenance(carry_.graph, o); });
    summary_ = SummarizeGraph(carry_.graph);
    WriteFile(out_ / kSummaryFile, summary_);
    if (!config_.gold.empty()) {
      std::vector<GoldStandardEntry> gold = LoadGoldStandard(config_.gold);
      std::string report;
      for (const auto &[method, triples] : MethodTripleSets(carry_.graph)) {
        report += FormatReportRow(method, Evaluate(triples, gold)) + '\n';
      }
      WriteFile(out_ / kEvaluationFile, report);
    }
  }

  const PipelineConfig &config_;
  fs::path out_;
  Resources resources_;
  Carry carry_;
  std::vector<std::string> log_;
  std::string summary_;
};

}  // namespace

RunResult RunPipeline(const PipelineConfig &config, const RunOptions &options) {
  RunResult result;
  fs::path out_dir(config.output_dir);
  Runner runner(config, out_dir);

  size_t first = 0;
  if (!options.from_checkpoint.empty()) {
    fs::path dir(options.from_checkpoint);
    std::optional<Stage> completed;
    for (Stage s : kAllStages) {
      if (fs::exists(dir / CheckpointName(s))) completed = s;
    }
    if (!completed) {
      throw StageError(Stage::kIngest, "no checkpoint found in " + dir.string());
    }
    try {
      runner.Load(*completed, dir);
    } catch (const std::exception &e) {
      throw StageError(*completed, std::string("loading checkpoint: ") + e.what());
    }
    first = static_cast<size_t>(*completed) + 1;
    result.last_stage = *completed;
  }

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    throw StageError(first < std::size(kAllStages) ? kAllStages[first] : Stage::kSerialize,
                     "cannot create output directory " + out_dir.string());
  }
  for (size_t i = first; i < std::size(kAllStages); ++i) {
    Stage stage = kAllStages[i];
    if (!result.first_stage) result.first_stage = stage;
    try {
      config.Validate();
      runner.Run(stage);
    } catch (const StageError &) {
      throw;
    } catch (const std::exception &e) {
      throw StageError(stage, e.what());
    }
    result.last_stage = stage;
    if (options.last_stage && stage == *options.last_stage) break;
  }
  result.summary = runner.summary();
  return result;
}

}  // namespace scikg
