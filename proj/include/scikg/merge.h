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

#ifndef SCIKG_MERGE_H_
#define SCIKG_MERGE_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scikg/corpus.h"
#include "scikg/ontology.h"

namespace scikg {

// Noun lemmas observed in the annotations, plus the corpus vocabulary used to
// guard the fallback plural rules.
class LemmaLexicon {
 public:
  LemmaLexicon() = default;

  // Surface -> lemma from plural-noun tokens (NNS, NNPS); when a surface has
  // several lemmas the most frequent wins, ties lexicographically.
  static LemmaLexicon Build(const std::vector<SentenceAnnotation> &sentences);

  void AddLemma(const std::string &surface, const std::string &lemma);
  void AddWord(const std::string &word) { vocabulary_.insert(word); }

  std::optional<std::string> Lemma(const std::string &surface) const;
  bool InVocabulary(const std::string &word) const { return vocabulary_.count(word) > 0; }

 private:
  std::map<std::string, std::string> lemmas_;
  std::set<std::string> vocabulary_;
};

// Singular form of the final (head) token. Uses the lexicon when it knows
// the word; otherwise "-ies" -> "-y", "-xes/-ches/-shes/-sses" drop "es",
// and a trailing "-s" is dropped, each only if the result (stem length >= 3)
// is in the corpus vocabulary.
std::string LemmaNormalize(const std::string &label, const LemmaLexicon &lexicon);

// The longest alternative of the label's ontology group (ties broken
// lexicographically), or the label itself.
std::string MergeByOntology(const std::string &label, const TopicOntology &ontology);

enum class MergeReason { kLemma, kOntologyAlt };

struct MergeDecision {
  std::string from_label;
  std::string to_label;
  MergeReason reason = MergeReason::kLemma;

  bool operator==(const MergeDecision &) const = default;
};

// Fixpoint of MergeByOntology(LemmaNormalize(.)). Applying it to its own
// output is the identity.
std::string CanonicalEntity(const std::string &label, const LemmaLexicon &lexicon,
                            const TopicOntology &ontology,
                            MergeReason *reason = nullptr);

struct MergeResult {
  CorpusState corpus;
  std::vector<MergeDecision> decisions;  // sorted by from_label
};

// Rewrites every entity, pair and triple endpoint to its canonical label.
// Triples whose endpoints collapse are dropped; colliding keys merge.
MergeResult ApplyMerging(const CorpusState &corpus, const LemmaLexicon &lexicon,
                         const TopicOntology &ontology);

// Replays a decision log as a single-pass substitution.
CorpusState ReplayMergeDecisions(const CorpusState &corpus,
                                 const std::vector<MergeDecision> &decisions);

// TSV "<from>\t<to>\t<LEMMA|ONTOLOGY_ALT>".
void WriteMergeDecisions(const std::vector<MergeDecision> &decisions, std::ostream &out);
std::vector<MergeDecision> ReadMergeDecisions(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_MERGE_H_
