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

#include "scikg/taxonomy.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include "scikg/error.h"
#include "scikg/labels.h"
#include "scikg/ontology.h"

namespace scikg {

namespace {
const std::vector<std::string> kEmpty;
}  // namespace

LexicalTaxonomy LexicalTaxonomy::Build(
    const std::vector<std::pair<std::string, std::string>> &child_parent,
    const std::vector<std::pair<std::string, std::string>> &lemma_sense) {
  LexicalTaxonomy t;
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> seen_edges;
  for (const auto &[child, parent] : child_parent) {
    nodes.insert(child);
    nodes.insert(parent);
    if (seen_edges.emplace(child, parent).second) t.hypernyms_[child].push_back(parent);
  }
  for (auto &[child, parents] : t.hypernyms_) std::sort(parents.begin(), parents.end());
  for (const auto &[lemma, synset] : lemma_sense) {
    nodes.insert(synset);
    auto &senses = t.senses_[lemma];
    if (std::find(senses.begin(), senses.end(), synset) == senses.end()) {
      senses.push_back(synset);
    }
  }
  for (auto &[lemma, senses] : t.senses_) std::sort(senses.begin(), senses.end());

  std::vector<std::string> cycle = FindCycle(t.hypernyms_);
  if (!cycle.empty()) {
    throw Error("hypernym edges contain a cycle: " + JoinTokens(cycle, " -> "));
  }

  std::vector<std::string> roots;
  for (const std::string &n : nodes) {
    if (t.hypernyms_.find(n) == t.hypernyms_.end()) roots.push_back(n);
  }
  if (roots.size() != 1) {
    throw Error("taxonomy must have exactly one root, found " +
                std::to_string(roots.size()) +
                (roots.empty() ? std::string() : " (" + JoinTokens(roots, ", ") + ")"));
  }
  t.root_ = roots.front();

  // Longest-path depth, memoized. Acyclicity was checked above.
  std::function<int(const std::string &)> depth = [&](const std::string &n) -> int {
    auto it = t.depth_.find(n);
    if (it != t.depth_.end()) return it->second;
    int d = 1;
    auto parents = t.hypernyms_.find(n);
    if (parents != t.hypernyms_.end()) {
      for (const std::string &p : parents->second) d = std::max(d, depth(p) + 1);
    }
    t.depth_.emplace(n, d);
    return d;
  };
  for (const std::string &n : nodes) depth(n);
  return t;
}

int LexicalTaxonomy::Depth(std::string_view synset) const {
  auto it = depth_.find(synset);
  if (it == depth_.end()) throw Error("unknown synset '" + std::string(synset) + "'");
  return it->second;
}

const std::vector<std::string> &LexicalTaxonomy::Hypernyms(std::string_view synset) const {
  auto it = hypernyms_.find(synset);
  return it == hypernyms_.end() ? kEmpty : it->second;
}

std::set<std::string> LexicalTaxonomy::AncestorsInclusive(std::string_view synset) const {
  std::set<std::string> seen;
  std::vector<std::string> frontier{std::string(synset)};
  while (!frontier.empty()) {
    std::string next = std::move(frontier.back());
    frontier.pop_back();
    if (!seen.insert(next).second) continue;
    for (const std::string &p : Hypernyms(next)) frontier.push_back(p);
  }
  return seen;
}

const std::vector<std::string> &LexicalTaxonomy::Senses(std::string_view lemma) const {
  auto it = senses_.find(lemma);
  return it == senses_.end() ? kEmpty : it->second;
}

LexicalTaxonomy ReadLexicalTaxonomy(std::istream &in, const std::string &name) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> senses;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 3 || f[0].empty() || f[2].empty()) {
      throw LocatedError(name, line_no, "expected 3 non-empty tab-separated fields");
    }
    if (f[1] == "hypernym") {
      edges.emplace_back(f[0], f[2]);
    } else if (f[1] == "sense") {
      auto lemma = NormalizeLabel(f[0]);
      if (!lemma) throw LocatedError(name, line_no, "empty lemma");
      senses.emplace_back(*lemma, f[2]);
    } else {
      throw LocatedError(name, line_no, "unknown relation '" + f[1] + "'");
    }
  }
  try {
    return LexicalTaxonomy::Build(edges, senses);
  } catch (const Error &e) {
    throw Error(name + ": " + e.what());
  }
}

LexicalTaxonomy LoadLexicalTaxonomy(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open taxonomy file: " + path);
  return ReadLexicalTaxonomy(in, path);
}

}  // namespace scikg
