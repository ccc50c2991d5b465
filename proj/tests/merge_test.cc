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
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/annotations.h"
#include "scikg/corpus.h"
#include "scikg/merge.h"
#include "scikg/ontology.h"
#include "test_util.h"

namespace scikg {
namespace {

using testing::DataPath;
using testing::TaggedSentence;

TEST(LemmaNormalizeTest, UsesAnnotationLemmas) {
  LemmaLexicon fixture = LemmaLexicon::Build(LoadSentenceAnnotations(DataPath("e2e/annotations.jsonl")));
  EXPECT_EQ(LemmaNormalize("ontologies", fixture), "ontology");
  EXPECT_EQ(LemmaNormalize("ontology", fixture), "ontology");
  LemmaLexicon lexicon = LemmaLexicon::Build(
      {TaggedSentence("d", 0, "similarity/NN measures/NNS/measure are/VBP good/JJ")});
  EXPECT_EQ(LemmaNormalize("similarity measures", lexicon), "similarity measure");
  // Only the head token changes.
  EXPECT_EQ(LemmaNormalize("measures similarity", lexicon), "measures similarity");
}

TEST(LemmaNormalizeTest, FallbackRulesNeedVocabulary) {
  LemmaLexicon lexicon;
  for (const char *w : {"database", "ontology", "box", "class", "ga"}) lexicon.AddWord(w);
  EXPECT_EQ(LemmaNormalize("graph databases", lexicon), "graph database");
  EXPECT_EQ(LemmaNormalize("ontologies", lexicon), "ontology");
  EXPECT_EQ(LemmaNormalize("boxes", lexicon), "box");
  EXPECT_EQ(LemmaNormalize("class", lexicon), "class");
  EXPECT_EQ(LemmaNormalize("gas", lexicon), "gas");
  EXPECT_EQ(LemmaNormalize("graph models", lexicon), "graph models");
}

TopicOntology AltOntology() {
  return TopicOntology::Build({}, {{"ontology matching", "ontology alignment"},
                                   {"ontology alignment", "ontology alignment"},
                                   {"ab", "ab"},
                                   {"cd", "ab"}});
}

TEST(MergeByOntologyTest, LongestAlternative) {
  TopicOntology onto = AltOntology();
  EXPECT_EQ(MergeByOntology("ontology matching", onto), "ontology alignment");
  EXPECT_EQ(MergeByOntology("ontology alignment", onto), "ontology alignment");
  EXPECT_EQ(MergeByOntology("semantic web", onto), "semantic web");
  EXPECT_EQ(MergeByOntology("cd", onto), "ab");
}

CorpusState OneTriple(const Triple &t, const std::string &doc = "d1") {
  CorpusState c;
  c.entities[t.subject].doc_ids.insert(doc);
  c.entities[t.object].doc_ids.insert(doc);
  c.oie[t].occurrences[doc] = 1;
  c.pairs[PairOf(t)].insert(doc);
  return c;
}

TEST(ApplyMergingTest, ComposesBothRules) {
  LemmaLexicon lexicon;
  lexicon.AddLemma("ontologies", "ontology");
  MergeResult r = ApplyMerging(OneTriple({"ontology matching", "uses", "ontologies"}), lexicon,
                               AltOntology());
  ASSERT_EQ(r.corpus.oie.size(), 1u);
  EXPECT_EQ(r.corpus.oie.begin()->first, (Triple{"ontology alignment", "uses", "ontology"}));
  ASSERT_EQ(r.decisions.size(), 2u);
  EXPECT_EQ(r.decisions[0], (MergeDecision{"ontologies", "ontology", MergeReason::kLemma}));
  EXPECT_EQ(r.decisions[1],
            (MergeDecision{"ontology matching", "ontology alignment", MergeReason::kOntologyAlt}));
}

TEST(ApplyMergingTest, CollapsedEndpointsDropped) {
  LemmaLexicon lexicon;
  lexicon.AddLemma("graphs", "graph");
  MergeResult r = ApplyMerging(OneTriple({"graph", "uses", "graphs"}), lexicon, {});
  EXPECT_TRUE(r.corpus.oie.empty());
  EXPECT_TRUE(r.corpus.pairs.empty());
}

TEST(ApplyMergingTest, EmptyCorpus) {
  MergeResult r = ApplyMerging({}, {}, {});
  EXPECT_EQ(r.corpus, CorpusState{});
  EXPECT_TRUE(r.decisions.empty());
}

TEST(ApplyMergingTest, DecisionLogRoundTrip) {
  std::vector<MergeDecision> log = {{"graphs", "graph", MergeReason::kLemma},
                                    {"ontology matching", "ontology alignment",
                                     MergeReason::kOntologyAlt}};
  std::ostringstream out;
  WriteMergeDecisions(log, out);
  EXPECT_EQ(out.str(), "graphs\tgraph\tLEMMA\nontology matching\tontology alignment\tONTOLOGY_ALT\n");
  std::istringstream in(out.str());
  EXPECT_EQ(ReadMergeDecisions(in, "log"), log);
}

// Random corpora over a pool of variant labels.
CorpusState RandomCorpus(std::mt19937_64 &rng) {
  const std::vector<std::string> pool = {"ontology", "ontologies", "ontology matching",
                                         "ontology alignment", "graph", "graphs", "ab", "cd",
                                         "knowledge bases", "knowledge base", "boxes"};
  const std::vector<std::string> rels = {"use", "improve"};
  CorpusState c;
  int n = 1 + static_cast<int>(rng() % 12);
  for (int i = 0; i < n; ++i) {
    std::string s = pool[rng() % pool.size()];
    std::string o = pool[rng() % pool.size()];
    if (s == o) continue;
    std::string doc = "d" + std::to_string(rng() % 4);
    Triple t{s, rels[rng() % rels.size()], o};
    TripleTable &table = (rng() % 2) ? c.ef : c.pos;
    table[t].occurrences[doc] += 1;
    c.pairs[PairOf(t)].insert(doc);
    c.entities[s].doc_ids.insert(doc);
    c.entities[o].doc_ids.insert(doc);
  }
  return c;
}

LemmaLexicon PropertyLexicon() {
  LemmaLexicon lexicon;
  lexicon.AddLemma("ontologies", "ontology");
  lexicon.AddLemma("graphs", "graph");
  lexicon.AddWord("box");
  lexicon.AddWord("knowledge");
  lexicon.AddWord("base");
  return lexicon;
}

// Properties: projection, replayable log, entity count never grows.
TEST(ApplyMergingTest, ProjectionReplayAndShrink) {
  std::mt19937_64 rng(53);
  LemmaLexicon lexicon = PropertyLexicon();
  TopicOntology onto = AltOntology();
  for (int trial = 0; trial < 300; ++trial) {
    CorpusState input = RandomCorpus(rng);
    MergeResult once = ApplyMerging(input, lexicon, onto);
    MergeResult twice = ApplyMerging(once.corpus, lexicon, onto);
    EXPECT_EQ(twice.corpus, once.corpus);
    EXPECT_TRUE(twice.decisions.empty());
    EXPECT_EQ(ReplayMergeDecisions(input, once.decisions), once.corpus);
    EXPECT_LE(once.corpus.EntityUniverse().size(), input.EntityUniverse().size());
    for (const auto &d : once.decisions) EXPECT_NE(d.from_label, d.to_label);
  }
}

}  // namespace
}  // namespace scikg
