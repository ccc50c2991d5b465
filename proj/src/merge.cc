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

#include "scikg/merge.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

bool EndsWith(const std::string &s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::optional<std::string> FallbackSingular(const std::string &word, const LemmaLexicon &lexicon) {
  auto accept = [&](std::string stem) -> std::optional<std::string> {
    if (stem.size() >= 3 && lexicon.InVocabulary(stem)) return stem;
    return std::nullopt;
  };
  if (EndsWith(word, "ies")) return accept(word.substr(0, word.size() - 3) + "y");
  for (std::string_view suffix : {"xes", "ches", "shes", "sses"}) {
    if (EndsWith(word, suffix)) return accept(word.substr(0, word.size() - 2));
  }
  if (EndsWith(word, "s") && !EndsWith(word, "ss")) {
    return accept(word.substr(0, word.size() - 1));
  }
  return std::nullopt;
}

std::string_view ReasonName(MergeReason reason) {
  return reason == MergeReason::kLemma ? "LEMMA" : "ONTOLOGY_ALT";
}

}  // namespace

LemmaLexicon LemmaLexicon::Build(const std::vector<SentenceAnnotation> &sentences) {
  std::map<std::string, std::map<std::string, int>> votes;
  LemmaLexicon lexicon;
  for (const SentenceAnnotation &s : sentences) {
    for (const Token &t : s.tokens) {
      std::string surface = Lowercase(t.surface);
      std::string lemma = Lowercase(t.lemma);
      lexicon.vocabulary_.insert(surface);
      lexicon.vocabulary_.insert(lemma);
      if (t.pos == "NNS" || t.pos == "NNPS") ++votes[surface][lemma];
    }
  }
  for (const auto &[surface, counts] : votes) {
    const std::string *best = nullptr;
    int best_count = 0;
    for (const auto &[lemma, n] : counts) {
      if (n > best_count) {
        best = &lemma;
        best_count = n;
      }
    }
    lexicon.lemmas_[surface] = *best;
  }
  return lexicon;
}

void LemmaLexicon::AddLemma(const std::string &surface, const std::string &lemma) {
  lemmas_[surface] = lemma;
  vocabulary_.insert(surface);
  vocabulary_.insert(lemma);
}

std::optional<std::string> LemmaLexicon::Lemma(const std::string &surface) const {
  auto it = lemmas_.find(surface);
  if (it == lemmas_.end()) return std::nullopt;
  return it->second;
}

std::string LemmaNormalize(const std::string &label, const LemmaLexicon &lexicon) {
  std::vector<std::string> tokens = SplitTokens(label);
  if (tokens.empty()) return label;
  std::string &head = tokens.back();
  if (auto lemma = lexicon.Lemma(head)) {
    head = *lemma;
  } else if (auto singular = FallbackSingular(head, lexicon)) {
    head = *singular;
  } else {
    return label;
  }
  return JoinTokens(tokens);
}

std::string MergeByOntology(const std::string &label, const TopicOntology &ontology) {
  const std::vector<std::string> *group = ontology.Alternatives(label);
  if (group == nullptr) return label;
  // The group is sorted, so the first longest member is the lexicographic
  // minimum among equals.
  const std::string *longest = &group->front();
  for (const std::string &alt : *group) {
    if (alt.size() > longest->size()) longest = &alt;
  }
  return *longest;
}

std::string CanonicalEntity(const std::string &label, const LemmaLexicon &lexicon,
                            const TopicOntology &ontology, MergeReason *reason) {
  constexpr int kMaxRounds = 8;
  std::string current = label;
  std::vector<std::string> seen{current};
  bool via_ontology = false;
  for (int round = 0; round < kMaxRounds; ++round) {
    std::string lemma = LemmaNormalize(current, lexicon);
    std::string next = MergeByOntology(lemma, ontology);
    if (next != lemma) via_ontology = true;
    if (next == current) break;
    if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
      // Oscillation: settle on the smallest member of the cycle.
      auto first = std::find(seen.begin(), seen.end(), next);
      current = *std::min_element(first, seen.end());
      break;
    }
    seen.push_back(next);
    current = next;
  }
  if (reason != nullptr) *reason = via_ontology ? MergeReason::kOntologyAlt : MergeReason::kLemma;
  return current;
}

MergeResult ApplyMerging(const CorpusState &corpus, const LemmaLexicon &lexicon,
                         const TopicOntology &ontology) {
  std::set<std::string> universe = corpus.EntityUniverse();
  for (const auto &[pair, docs] : corpus.pairs) {
    universe.insert(pair.subject);
    universe.insert(pair.object);
  }
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
    for (const auto &[t, record] : corpus.Table(source)) {
      universe.insert(t.subject);
      universe.insert(t.object);
    }
  }

  MergeResult result;
  std::map<std::string, std::string> canonical;
  for (const std::string &label : universe) {
    MergeReason reason;
    std::string to = CanonicalEntity(label, lexicon, ontology, &reason);
    if (to != label) result.decisions.push_back({label, to, reason});
    canonical.emplace(label, std::move(to));
  }
  result.corpus = RewriteCorpus(corpus, [&](const DocId &, const std::string &label) {
    return std::vector<std::string>{canonical.at(label)};
  });
  return result;
}

CorpusState ReplayMergeDecisions(const CorpusState &corpus,
                                 const std::vector<MergeDecision> &decisions) {
  std::map<std::string, std::string> substitution;
  for (const MergeDecision &d : decisions) substitution[d.from_label] = d.to_label;
  return RewriteCorpus(corpus, [&](const DocId &, const std::string &label) {
    auto it = substitution.find(label);
    return std::vector<std::string>{it == substitution.end() ? label : it->second};
  });
}

void WriteMergeDecisions(const std::vector<MergeDecision> &decisions, std::ostream &out) {
  for (const MergeDecision &d : decisions) {
    out << d.from_label << '\t' << d.to_label << '\t' << ReasonName(d.reason) << '\n';
  }
}

std::vector<MergeDecision> ReadMergeDecisions(std::istream &in, const std::string &name) {
  std::vector<MergeDecision> decisions;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 3) throw LocatedError(name, line_no, "expected 3 tab-separated fields");
    MergeDecision d{f[0], f[1], MergeReason::kLemma};
    if (f[2] == "ONTOLOGY_ALT") {
      d.reason = MergeReason::kOntologyAlt;
    } else if (f[2] != "LEMMA") {
      throw LocatedError(name, line_no, "unknown merge reason '" + f[2] + "'");
    }
    decisions.push_back(std::move(d));
  }
  return decisions;
}

}  // namespace scikg
