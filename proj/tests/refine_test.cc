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
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "scikg/corpus.h"
#include "scikg/integrate.h"
#include "scikg/labels.h"
#include "scikg/refine.h"
#include "scikg/resources.h"
#include "test_util.h"

namespace scikg {
namespace {

using testing::TaggedSentence;

const std::set<std::string> kBlacklist = {"it", "this"};

TEST(CleanEntityTest, Examples) {
  const auto &stop = DefaultStopWords();
  EXPECT_FALSE(CleanEntity("it", kBlacklist, stop).has_value());
  EXPECT_EQ(CleanEntity("owl's semantics.", kBlacklist, stop), "owl semantics");
  EXPECT_EQ(CleanEntity("semantic web", kBlacklist, stop), "semantic web");
  EXPECT_EQ(CleanEntity("the semantic web", kBlacklist, stop), "semantic web");
  EXPECT_FALSE(CleanEntity("the", kBlacklist, stop).has_value());
  EXPECT_FALSE(CleanEntity("...", kBlacklist, stop).has_value());
}

TEST(SplitEntityTest, Examples) {
  const auto &stop = DefaultStopWords();
  EXPECT_EQ(SplitEntity("machine learning and data mining", kBlacklist, stop),
            (std::vector<std::string>{"machine learning", "data mining"}));
  EXPECT_EQ(SplitEntity("ontology alignment", kBlacklist, stop),
            std::vector<std::string>{"ontology alignment"});
  // Single letters are ordinary tokens here; the default list would treat
  // "a" as a stop word and drop that part.
  EXPECT_EQ(SplitEntity("a and b and c", {}, {}), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(SplitEntity("a and b and c", {}, stop), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(SplitEntity("and", kBlacklist, stop), std::vector<std::string>{});
}

// Property: splitting matches a brute-force token split on random labels.
TEST(SplitEntityTest, AgreesWithTokenSplit) {
  const std::vector<std::string> words = {"x", "graph", "and", "model", "web", "data"};
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> tokens;
    int n = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < n; ++i) tokens.push_back(words[rng() % words.size()]);
    std::vector<std::string> expected, current;
    auto flush = [&] {
      if (!current.empty()) {
        std::string part = JoinTokens(current);
        if (std::find(expected.begin(), expected.end(), part) == expected.end()) {
          expected.push_back(part);
        }
      }
      current.clear();
    };
    for (const auto &t : tokens) {
      if (t == "and") {
        flush();
      } else {
        current.push_back(t);
      }
    }
    flush();
    EXPECT_EQ(SplitEntity(JoinTokens(tokens), {}, {}), expected) << JoinTokens(tokens);
  }
}

TEST(AcronymTest, BuildsMapFromDefinitions) {
  AcronymMap map = BuildAcronymMap(
      {"We use the Web Ontology Language (OWL) here.",
       "A Support Vector Machine (SVM) is trained in (2019)."},
      DefaultStopWords());
  EXPECT_EQ(map.size(), 2u);
  EXPECT_EQ(map["owl"], "web ontology language");
  EXPECT_EQ(map["svm"], "support vector machine");
  EXPECT_EQ(map.count("2019"), 0u);
}

TEST(AcronymTest, StopWordsMaySitInside) {
  AcronymMap map = BuildAcronymMap({"the Bag of Words (BoW) model"}, DefaultStopWords());
  EXPECT_EQ(map["bow"], "bag of words");
}

TEST(AcronymTest, FirstDefinitionWins) {
  AcronymMap map = BuildAcronymMap(
      {"sentiment analysis (SA) first", "simulated annealing (SA) later"}, DefaultStopWords());
  EXPECT_EQ(map["sa"], "sentiment analysis");
}

TEST(AcronymTest, ExpandsTokens) {
  AcronymMap map = {{"owl", "web ontology language"}};
  EXPECT_EQ(ExpandAcronyms("owl", map), "web ontology language");
  EXPECT_EQ(ExpandAcronyms("owl reasoner", map), "web ontology language reasoner");
  EXPECT_EQ(ExpandAcronyms("owl", AcronymMap{}), "owl");
  EXPECT_EQ(ExpandAcronyms("bowl", map), "bowl");
}

CorpusState TwoDocCorpus(const std::string &label) {
  CorpusState corpus;
  for (const std::string doc : {"d1", "d2"}) {
    corpus.entities[label].doc_ids.insert(doc);
    corpus.entities["reasoning"].doc_ids.insert(doc);
    corpus.ef[{label, "used-for", "reasoning"}].occurrences[doc] = 1;
    corpus.pairs[{label, "reasoning"}].insert(doc);
  }
  return corpus;
}

TEST(RefineCorpusTest, AcronymsStayInTheirDocument) {
  std::vector<SentenceAnnotation> sentences = {
      TaggedSentence("d1", 0, "Web/NN Ontology/NN Language/NN (OWL)/NN for/IN reasoning/NN"),
      TaggedSentence("d2", 0, "OWL/NN for/IN reasoning/NN")};
  RefinerOptions options;
  options.stopwords = DefaultStopWords();
  CorpusState refined = RefineCorpus(TwoDocCorpus("owl"), sentences, options);
  ASSERT_EQ(refined.ef.size(), 2u);
  EXPECT_EQ(refined.ef.at({"web ontology language", "used-for", "reasoning"}).DocIds(),
            DocSet{"d1"});
  EXPECT_EQ(refined.ef.at({"owl", "used-for", "reasoning"}).DocIds(), DocSet{"d2"});
}

TEST(RefineCorpusTest, DocumentsExpandIndependently) {
  std::vector<SentenceAnnotation> sentences = {
      TaggedSentence("d1", 0, "sentiment/NN analysis/NN (SA)/NN helps/VBZ"),
      TaggedSentence("d2", 0, "simulated/JJ annealing/NN (SA)/NN helps/VBZ")};
  RefinerOptions options;
  options.stopwords = DefaultStopWords();
  CorpusState refined = RefineCorpus(TwoDocCorpus("sa"), sentences, options);
  EXPECT_EQ(refined.ef.at({"sentiment analysis", "used-for", "reasoning"}).DocIds(),
            DocSet{"d1"});
  EXPECT_EQ(refined.ef.at({"simulated annealing", "used-for", "reasoning"}).DocIds(),
            DocSet{"d2"});
}

BackgroundCounts Counts(int64_t in, int64_t sib, int64_t out, const std::string &label) {
  BackgroundCounts c;
  c.in_domain.total_words = c.sibling.total_words = c.out_domain.total_words = 10000;
  if (in) c.in_domain.counts[label] = in;
  if (sib) c.sibling.counts[label] = sib;
  if (out) c.out_domain.counts[label] = out;
  return c;
}

TEST(GenericityTest, Examples) {
  EXPECT_EQ(GenericityFilter("content", Counts(50, 48, 52, "content"), {}),
            GenericityVerdict::kDrop);
  EXPECT_EQ(GenericityFilter("semantic web", Counts(1, 50, 50, "semantic web"), {"semantic web"}),
            GenericityVerdict::kKeep);
  BackgroundCounts c = Counts(40, 1, 0, "x");
  GenericityStats stats = ComputeGenericity("x", c);
  EXPECT_DOUBLE_EQ(stats.in_domain, 40.0 / 10000);
  EXPECT_DOUBLE_EQ(stats.sibling_ratio, 40.0);
  EXPECT_TRUE(std::isinf(stats.out_domain_ratio));
  EXPECT_EQ(GenericityFilter("x", c, {}), GenericityVerdict::kKeep);
}

TEST(GenericityTest, ThresholdsAreInclusive) {
  EXPECT_EQ(GenericityFilter("x", Counts(20, 10, 2, "x"), {}), GenericityVerdict::kKeep);
  EXPECT_EQ(GenericityFilter("x", Counts(19, 10, 1, "x"), {}), GenericityVerdict::kDrop);
  EXPECT_EQ(GenericityFilter("x", Counts(20, 10, 3, "x"), {}), GenericityVerdict::kDrop);
  // Absent in-domain: dropped unless whitelisted.
  EXPECT_EQ(GenericityFilter("x", Counts(0, 0, 0, "x"), {}), GenericityVerdict::kDrop);
  EXPECT_EQ(GenericityFilter("x", Counts(0, 0, 0, "x"), {"x"}), GenericityVerdict::kKeep);
}

TEST(RefineEntityTest, WhitelistSurvivesExceptBlacklist) {
  RefinerOptions options;
  options.stopwords = DefaultStopWords();
  options.blacklist = kBlacklist;
  options.whitelist = {"semantic web", "data mining"};
  options.counts = Counts(0, 0, 0, "unused");
  EXPECT_EQ(RefineEntity("semantic web", {}, options), std::vector<std::string>{"semantic web"});
  EXPECT_EQ(RefineEntity("machine learning and data mining", {}, options),
            std::vector<std::string>{"data mining"});
  EXPECT_TRUE(RefineEntity("it", {}, options).empty());
  EXPECT_TRUE(RefineEntity("content", {}, options).empty());
}

// Property: every output token comes from the input label or an expansion.
TEST(RefineEntityTest, NeverInventsTokens) {
  const std::vector<std::string> words = {"owl", "graph", "and", "the", "model's", "web.",
                                          "it", "(data)", "svm"};
  AcronymMap map = {{"owl", "web ontology language"}, {"svm", "support vector machine"}};
  RefinerOptions options;
  options.stopwords = DefaultStopWords();
  options.blacklist = kBlacklist;
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> tokens;
    int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) tokens.push_back(words[rng() % words.size()]);
    std::string label = JoinTokens(tokens);
    std::string allowed = label + " web ontology language support vector machine model";
    for (const auto &out : RefineEntity(label, map, options)) {
      EXPECT_TRUE(IsNormalized(out));
      for (const auto &t : SplitTokens(out)) {
        EXPECT_NE(allowed.find(t), std::string::npos) << label << " -> " << out;
      }
    }
  }
}

}  // namespace
}  // namespace scikg
