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

#ifndef SCIKG_TAXONOMY_H_
#define SCIKG_TAXONOMY_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scikg {

// Verb taxonomy over synsets: hypernym edges form a DAG with one root, and
// each lemma points at the synsets it can denote.
class LexicalTaxonomy {
 public:
  LexicalTaxonomy() = default;

  // Throws Error on a cycle, zero or several roots.
  static LexicalTaxonomy Build(
      const std::vector<std::pair<std::string, std::string>> &child_parent,
      const std::vector<std::pair<std::string, std::string>> &lemma_sense);

  const std::string &root() const { return root_; }
  size_t size() const { return depth_.size(); }
  bool HasSynset(std::string_view synset) const { return depth_.count(synset) > 0; }

  // Depth with the root at 1, measured along the longest hypernym path so that
  // a proper ancestor is always strictly shallower than its descendants.
  int Depth(std::string_view synset) const;

  const std::vector<std::string> &Hypernyms(std::string_view synset) const;

  // The synset and all of its transitive hypernyms.
  std::set<std::string> AncestorsInclusive(std::string_view synset) const;

  // Senses of a lemma, sorted; empty when the lemma is unknown.
  const std::vector<std::string> &Senses(std::string_view lemma) const;

  const std::map<std::string, std::vector<std::string>, std::less<>> &lemma_index() const {
    return senses_;
  }

 private:
  std::string root_;
  std::map<std::string, int, std::less<>> depth_;
  std::map<std::string, std::vector<std::string>, std::less<>> hypernyms_;
  std::map<std::string, std::vector<std::string>, std::less<>> senses_;
};

// TSV rows "<child-synset>\thypernym\t<parent-synset>" and
// "<lemma>\tsense\t<synset>".
LexicalTaxonomy LoadLexicalTaxonomy(const std::string &path);
LexicalTaxonomy ReadLexicalTaxonomy(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_TAXONOMY_H_
