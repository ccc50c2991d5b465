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

#ifndef SCIKG_INTEGRATE_H_
#define SCIKG_INTEGRATE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "scikg/model.h"
#include "scikg/ontology.h"

namespace scikg {

// Built-in English stop-word list used for n-gram boundaries, entity
// trimming and acronym definitions.
const std::set<std::string> &DefaultStopWords();

// Verbs never used as PoS relations: be-forms, auxiliary have/do and modals.
const std::set<std::string> &DefaultAuxiliaries();

// Entity set E_i of one sentence: label -> type of its first mention.
using EntitySet = std::map<std::string, EntityType>;

struct SentenceExtraction {
  DocId doc_id;
  int sent_idx = 0;
  EntitySet entities;
  std::vector<CandidateTriple> ef;
  std::vector<CandidateTriple> oie;
  std::vector<CandidateTriple> pos;
};

// Topic mentions for every maximal n-gram (n <= 3) that exactly matches an
// ontology label after normalization. N-grams may not start or end on a stop
// word; a match contained in a longer match is suppressed.
std::vector<EntityMention> MatchTopics(const SentenceAnnotation &sentence,
                                       const TopicOntology &ontology,
                                       const std::set<std::string> &stopwords);

// E_i: labels of the EF mentions plus topic mentions.
EntitySet BuildEntitySet(const SentenceAnnotation &sentence,
                         const std::vector<EntityMention> &topics);

// EF relations of the sentence as candidate triples (relation labels are
// normalized, self-loops skipped).
std::vector<CandidateTriple> CollectEfTriples(const SentenceAnnotation &sentence);

// OpenIE relations whose subject and object both belong to E_i. The relation
// is reduced to the lemma of its head verb.
std::vector<CandidateTriple> FilterOpenieTriples(const SentenceAnnotation &sentence,
                                                 const EntitySet &entity_set,
                                                 const std::set<std::string> &auxiliaries);

// One triple per (earlier mention, verb, later mention) where the verb lies
// strictly between two non-overlapping mentions whose labels are in E_i.
std::vector<CandidateTriple> ExtractPosVerbTriples(const SentenceAnnotation &sentence,
                                                   const std::vector<EntityMention> &mentions,
                                                   const EntitySet &entity_set,
                                                   const std::set<std::string> &auxiliaries);

// Removes EF triples labelled "conjunction".
std::vector<CandidateTriple> DiscardConjunctionRelations(std::vector<CandidateTriple> triples);

// Runs all per-sentence steps.
SentenceExtraction ExtractSentence(const SentenceAnnotation &sentence,
                                   const TopicOntology &ontology,
                                   const std::set<std::string> &stopwords,
                                   const std::set<std::string> &auxiliaries);

}  // namespace scikg

#endif  // SCIKG_INTEGRATE_H_
