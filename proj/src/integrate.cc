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

#include "scikg/integrate.h"

#include <algorithm>
#include <tuple>

#include "scikg/labels.h"

namespace scikg {

namespace {

constexpr int kMaxNgram = 3;

// Auxiliary only when another verb follows, e.g. "has adopted", "did not use".
const std::set<std::string> kConditionalAuxiliaries = {"have", "do"};

bool IsVerbTag(const std::string &pos) { return pos.rfind("VB", 0) == 0; }
bool IsAdverbTag(const std::string &pos) { return pos.rfind("RB", 0) == 0; }

std::string LowerLemma(const Token &token) {
  auto lemma = NormalizeLabel(token.lemma);
  return lemma ? *lemma : Lowercase(token.surface);
}

bool IsAuxiliaryAt(const std::vector<Token> &tokens, size_t k,
                   const std::set<std::string> &auxiliaries) {
  std::string lemma = LowerLemma(tokens[k]);
  if (auxiliaries.count(lemma) == 0) return false;
  if (kConditionalAuxiliaries.count(lemma) == 0) return true;
  for (size_t j = k + 1; j < tokens.size(); ++j) {
    if (IsAdverbTag(tokens[j].pos)) continue;
    return IsVerbTag(tokens[j].pos);
  }
  return false;
}

// Lemma of the head verb of an OpenIE relation phrase: the last
// non-auxiliary verb token whose surface is one of the phrase's words,
// looking between the two arguments first and then anywhere in the sentence.
std::string HeadVerbLemma(const SentenceAnnotation &sentence, const RawRelation &relation,
                          const std::set<std::string> &auxiliaries) {
  std::vector<std::string> words = SplitTokens(relation.label);
  const EntityMention &subj = sentence.entities[relation.subject];
  const EntityMention &obj = sentence.entities[relation.object];
  const size_t n = sentence.tokens.size();
  size_t lo = 0, hi = n;
  if (subj.end_token <= obj.start_token) {
    lo = subj.end_token;
    hi = obj.start_token;
  } else if (obj.end_token <= subj.start_token) {
    lo = obj.end_token;
    hi = subj.start_token;
  }

  auto search = [&](size_t begin, size_t end, bool skip_aux) -> std::optional<std::string> {
    for (size_t k = end; k-- > begin;) {
      const Token &t = sentence.tokens[k];
      if (!IsVerbTag(t.pos)) continue;
      if (std::find(words.begin(), words.end(), Lowercase(t.surface)) == words.end()) continue;
      if (skip_aux && IsAuxiliaryAt(sentence.tokens, k, auxiliaries)) continue;
      return LowerLemma(t);
    }
    return std::nullopt;
  };
  for (bool skip_aux : {true, false}) {
    if (auto lemma = search(lo, hi, skip_aux)) return *lemma;
    if (auto lemma = search(0, n, skip_aux)) return *lemma;
  }
  // No verb token found: keep the last word of the phrase.
  return words.empty() ? relation.label : words.back();
}

}  // namespace

const std::set<std::string> &DefaultStopWords() {
  static const std::set<std::string> kStopWords = {
      "a",       "about",  "above", "after", "again",   "against", "all",     "also",
      "am",      "an",     "and",   "any",   "are",     "as",      "at",      "be",
      "because", "been",   "before", "being", "below",  "between", "both",    "but",
      "by",      "can",    "could", "did",   "do",      "does",    "doing",   "down",
      "during",  "each",   "either", "few",  "for",     "from",    "further", "had",
      "has",     "have",   "having", "he",   "her",     "here",    "hers",    "him",
      "his",     "how",    "i",     "if",    "in",      "into",    "is",      "its",
      "itself",  "just",   "may",   "me",    "might",   "more",    "most",    "must",
      "my",      "no",     "nor",   "not",   "of",      "off",     "on",      "once",
      "only",    "or",     "other", "our",   "ours",    "out",     "over",    "own",
      "same",    "she",    "should", "so",   "some",    "such",    "than",    "that",
      "the",     "their",  "theirs", "them", "then",    "there",   "these",   "they",
      "this",    "those",  "through", "to",  "too",     "under",   "until",   "up",
      "us",      "very",   "was",   "we",    "were",    "what",    "when",    "where",
      "which",   "while",  "who",   "whom",  "why",     "will",    "with",    "would",
      "you",     "your",   "yours",
  };
  return kStopWords;
}

const std::set<std::string> &DefaultAuxiliaries() {
  static const std::set<std::string> kAuxiliaries = {
      "be",   "am",    "is",    "are",   "was",    "were", "been", "being",
      "have", "do",    "can",   "could", "may",    "might", "must", "shall",
      "should", "will", "would", "ought",
  };
  return kAuxiliaries;
}

std::vector<EntityMention> MatchTopics(const SentenceAnnotation &sentence,
                                       const TopicOntology &ontology,
                                       const std::set<std::string> &stopwords) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<std::string> words(n);
  std::vector<bool> stop(n);
  for (int i = 0; i < n; ++i) {
    words[i] = Lowercase(sentence.tokens[i].surface);
    stop[i] = stopwords.count(words[i]) > 0;
  }

  std::vector<EntityMention> matches;
  for (int len = kMaxNgram; len >= 1; --len) {
    for (int start = 0; start + len <= n; ++start) {
      int end = start + len;
      if (stop[start] || stop[end - 1]) continue;
      bool contained = false;
      for (const EntityMention &m : matches) {
        if (m.start_token <= start && end <= m.end_token) {
          contained = true;
          break;
        }
      }
      if (contained) continue;
      std::vector<std::string> gram(words.begin() + start, words.begin() + end);
      auto label = NormalizeLabel(JoinTokens(gram));
      if (!label || !ontology.IsTopic(*label)) continue;
      matches.push_back({start, end, *label, EntityType::kTopic, MentionSource::kCSO});
    }
  }
  std::sort(matches.begin(), matches.end(), [](const EntityMention &a, const EntityMention &b) {
    return std::tie(a.start_token, a.end_token) < std::tie(b.start_token, b.end_token);
  });
  return matches;
}

EntitySet BuildEntitySet(const SentenceAnnotation &sentence,
                         const std::vector<EntityMention> &topics) {
  EntitySet set;
  for (const EntityMention &m : sentence.entities) {
    if (m.source == MentionSource::kEF) set.emplace(m.label, m.type);
  }
  for (const EntityMention &m : topics) set.emplace(m.label, m.type);
  return set;
}

std::vector<CandidateTriple> CollectEfTriples(const SentenceAnnotation &sentence) {
  std::vector<CandidateTriple> out;
  for (const RawRelation &r : sentence.relations) {
    if (r.source != MentionSource::kEF) continue;
    const std::string &s = sentence.entities[r.subject].label;
    const std::string &o = sentence.entities[r.object].label;
    if (s == o) continue;
    out.push_back({{s, r.label, o}, TripleSource::kEF, {sentence.doc_id}, 1});
  }
  return out;
}

std::vector<CandidateTriple> FilterOpenieTriples(const SentenceAnnotation &sentence,
                                                 const EntitySet &entity_set,
                                                 const std::set<std::string> &auxiliaries) {
  std::vector<CandidateTriple> out;
  for (const RawRelation &r : sentence.relations) {
    if (r.source != MentionSource::kOIE) continue;
    const std::string &s = sentence.entities[r.subject].label;
    const std::string &o = sentence.entities[r.object].label;
    if (s == o || entity_set.count(s) == 0 || entity_set.count(o) == 0) continue;
    std::string verb = HeadVerbLemma(sentence, r, auxiliaries);
    out.push_back({{s, verb, o}, TripleSource::kOIE, {sentence.doc_id}, 1});
  }
  return out;
}

std::vector<CandidateTriple> ExtractPosVerbTriples(const SentenceAnnotation &sentence,
                                                   const std::vector<EntityMention> &mentions,
                                                   const EntitySet &entity_set,
                                                   const std::set<std::string> &auxiliaries) {
  std::vector<const EntityMention *> spans;
  std::set<std::tuple<int, int, std::string>> seen;
  for (const EntityMention &m : mentions) {
    if (m.source == MentionSource::kOIE || entity_set.count(m.label) == 0) continue;
    if (seen.emplace(m.start_token, m.end_token, m.label).second) spans.push_back(&m);
  }
  std::sort(spans.begin(), spans.end(), [](const EntityMention *a, const EntityMention *b) {
    return std::tie(a->start_token, a->end_token, a->label) <
           std::tie(b->start_token, b->end_token, b->label);
  });

  std::set<Triple> triples;
  for (const EntityMention *first : spans) {
    for (const EntityMention *second : spans) {
      if (first->end_token > second->start_token || first->label == second->label) continue;
      for (int k = first->end_token; k < second->start_token; ++k) {
        const Token &t = sentence.tokens[k];
        if (!IsVerbTag(t.pos) || IsAuxiliaryAt(sentence.tokens, k, auxiliaries)) continue;
        triples.insert({first->label, LowerLemma(t), second->label});
      }
    }
  }
  std::vector<CandidateTriple> out;
  for (const Triple &t : triples) {
    out.push_back({t, TripleSource::kPOS, {sentence.doc_id}, 1});
  }
  return out;
}

std::vector<CandidateTriple> DiscardConjunctionRelations(std::vector<CandidateTriple> triples) {
  std::erase_if(triples,
                [](const CandidateTriple &t) { return t.triple.relation == "conjunction"; });
  return triples;
}

SentenceExtraction ExtractSentence(const SentenceAnnotation &sentence,
                                   const TopicOntology &ontology,
                                   const std::set<std::string> &stopwords,
                                   const std::set<std::string> &auxiliaries) {
  SentenceExtraction x;
  x.doc_id = sentence.doc_id;
  x.sent_idx = sentence.sent_idx;
  std::vector<EntityMention> topics = MatchTopics(sentence, ontology, stopwords);
  x.entities = BuildEntitySet(sentence, topics);
  x.ef = DiscardConjunctionRelations(CollectEfTriples(sentence));
  x.oie = FilterOpenieTriples(sentence, x.entities, auxiliaries);

  std::vector<EntityMention> mentions;
  for (const EntityMention &m : sentence.entities) {
    if (m.source == MentionSource::kEF) mentions.push_back(m);
  }
  mentions.insert(mentions.end(), topics.begin(), topics.end());
  x.pos = ExtractPosVerbTriples(sentence, mentions, x.entities, auxiliaries);
  return x;
}

}  // namespace scikg
