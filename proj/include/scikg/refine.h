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

#ifndef SCIKG_REFINE_H_
#define SCIKG_REFINE_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scikg/corpus.h"
#include "scikg/model.h"
#include "scikg/resources.h"

namespace scikg {

// Strips punctuation (dots, apostrophes, possessive "'s", brackets, quotes),
// trims leading/trailing stop words and re-normalizes. Returns nullopt when
// the label is blacklisted or nothing is left.
std::optional<std::string> CleanEntity(const std::string &label,
                                       const std::set<std::string> &blacklist,
                                       const std::set<std::string> &stopwords);

// Splits on the standalone token "and"; every part is cleaned again and
// empty parts are dropped.
std::vector<std::string> SplitEntity(const std::string &label,
                                     const std::set<std::string> &blacklist,
                                     const std::set<std::string> &stopwords);

// Lowercased acronym -> normalized expansion, scoped to one paper.
using AcronymMap = std::map<std::string, std::string>;

// Scans texts for "<words> (<ACRONYM>)" where the acronym's letters are the
// initials of the preceding words in order (stop words may be skipped), or
// failing that a permutation of the initials of exactly as many preceding
// words ("Web Ontology Language (OWL)"). The first definition wins.
AcronymMap BuildAcronymMap(const std::vector<std::string> &texts,
                           const std::set<std::string> &stopwords);

// Replaces every token equal to a defined acronym by its expansion. A token
// directly preceded by its own expansion is dropped instead.
std::string ExpandAcronyms(const std::string &label, const AcronymMap &acronyms);
std::vector<std::string> ExpandAcronyms(const std::vector<std::string> &labels,
                                        const AcronymMap &acronyms);

struct GenericityStats {
  double in_domain = 0;   // c'
  double sibling = 0;     // c''
  double out_domain = 0;  // c'''
  double sibling_ratio = 0;     // r' = c' / c'' (infinite when c'' = 0)
  double out_domain_ratio = 0;  // r'' = c' / c''' (infinite when c''' = 0)
};

GenericityStats ComputeGenericity(const std::string &label, const BackgroundCounts &counts);

enum class GenericityVerdict { kKeep, kDrop };

// Keep iff whitelisted, or present in-domain with r' >= sibling threshold
// and r'' >= out-of-domain threshold.
GenericityVerdict GenericityFilter(const std::string &label, const BackgroundCounts &counts,
                                   const std::set<std::string> &whitelist,
                                   double sibling_threshold = 2,
                                   double out_domain_threshold = 10);

struct RefinerOptions {
  std::set<std::string> blacklist;
  std::set<std::string> whitelist;
  std::set<std::string> stopwords;
  std::optional<BackgroundCounts> counts;  // genericity filter off when absent
  double sibling_threshold = 2;
  double out_domain_threshold = 10;
};

// Full refinement of one entity label in the context of its paper:
// blacklist, cleaning, splitting, acronym expansion, genericity filter.
// Whitelisted labels are kept verbatim.
std::vector<std::string> RefineEntity(const std::string &label, const AcronymMap &acronyms,
                                      const RefinerOptions &options);

// Applies RefineEntity to the corpus, building one acronym map per paper from
// its sentence texts.
CorpusState RefineCorpus(const CorpusState &corpus,
                         const std::vector<SentenceAnnotation> &sentences,
                         const RefinerOptions &options);

}  // namespace scikg

#endif  // SCIKG_REFINE_H_
