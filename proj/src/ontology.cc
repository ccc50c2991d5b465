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

#include "scikg/ontology.h"

#include <algorithm>
#include <fstream>
#include <istream>

#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

const std::vector<std::string> kNoParents;

enum class Color { kWhite, kGray, kBlack };

bool Visit(const std::string &node,
           const std::map<std::string, std::vector<std::string>, std::less<>> &parents,
           std::map<std::string, Color> *color, std::vector<std::string> *stack,
           std::vector<std::string> *cycle) {
  (*color)[node] = Color::kGray;
  stack->push_back(node);
  auto it = parents.find(node);
  if (it != parents.end()) {
    for (const std::string &next : it->second) {
      Color c = (*color)[next];
      if (c == Color::kGray) {
        auto start = std::find(stack->begin(), stack->end(), next);
        cycle->assign(start, stack->end());
        cycle->push_back(next);
        return true;
      }
      if (c == Color::kWhite && Visit(next, parents, color, stack, cycle)) return true;
    }
  }
  stack->pop_back();
  (*color)[node] = Color::kBlack;
  return false;
}

}  // namespace

std::vector<std::string> SplitTsv(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  std::string_view view(line);
  if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
  while (true) {
    size_t tab = view.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(view.substr(start));
      break;
    }
    fields.emplace_back(view.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::vector<std::string> FindCycle(
    const std::map<std::string, std::vector<std::string>, std::less<>> &parents) {
  std::map<std::string, Color> color;
  std::vector<std::string> stack;
  std::vector<std::string> cycle;
  for (const auto &[node, unused] : parents) {
    if (color[node] == Color::kWhite && Visit(node, parents, &color, &stack, &cycle)) {
      return cycle;
    }
  }
  return {};
}

TopicOntology TopicOntology::Build(
    const std::vector<std::pair<std::string, std::string>> &child_parent,
    const std::vector<std::pair<std::string, std::string>> &alt_labels) {
  TopicOntology o;
  for (const auto &[child, parent] : child_parent) {
    o.topics_.insert(child);
    o.topics_.insert(parent);
    if (o.edges_.emplace(child, parent).second) o.parents_[child].push_back(parent);
  }
  for (auto &[child, parents] : o.parents_) std::sort(parents.begin(), parents.end());

  std::vector<std::string> cycle = FindCycle(o.parents_);
  if (!cycle.empty()) {
    throw Error("superTopicOf edges contain a cycle: " + JoinTokens(cycle, " -> "));
  }

  std::map<std::string, std::set<std::string>> by_rep;
  for (const auto &[label, rep] : alt_labels) {
    by_rep[rep].insert(rep);
    by_rep[rep].insert(label);
  }
  for (const auto &[rep, members] : by_rep) {
    size_t id = o.groups_.size();
    o.groups_.emplace_back(members.begin(), members.end());
    for (const std::string &m : members) {
      auto [it, inserted] = o.group_of_.emplace(m, id);
      if (!inserted) {
        throw Error("label '" + m + "' belongs to two alternative groups ('" +
                    o.groups_[it->second].front() + "' and '" + members.begin()->c_str() +
                    "')");
      }
      o.topics_.insert(m);
    }
  }
  return o;
}

const std::vector<std::string> &TopicOntology::Parents(std::string_view label) const {
  auto it = parents_.find(label);
  return it == parents_.end() ? kNoParents : it->second;
}

std::set<std::string> TopicOntology::Ancestors(std::string_view label) const {
  std::set<std::string> seen;
  std::vector<std::string> frontier(Parents(label));
  while (!frontier.empty()) {
    std::string next = std::move(frontier.back());
    frontier.pop_back();
    if (!seen.insert(next).second) continue;
    for (const std::string &p : Parents(next)) frontier.push_back(p);
  }
  return seen;
}

const std::vector<std::string> *TopicOntology::Alternatives(std::string_view label) const {
  auto it = group_of_.find(label);
  if (it == group_of_.end()) return nullptr;
  return &groups_[it->second];
}

TopicOntology ReadTopicOntology(std::istream &in, const std::string &name) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> alts;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 3) {
      throw LocatedError(name, line_no, "expected 3 tab-separated fields");
    }
    auto a = NormalizeLabel(f[0]);
    auto b = NormalizeLabel(f[2]);
    if (!a || !b) throw LocatedError(name, line_no, "empty topic label");
    if (f[1] == "superTopicOf") {
      edges.emplace_back(*a, *b);
    } else if (f[1] == "altLabel") {
      alts.emplace_back(*a, *b);
    } else {
      throw LocatedError(name, line_no, "unknown relation '" + f[1] + "'");
    }
  }
  try {
    return TopicOntology::Build(edges, alts);
  } catch (const Error &e) {
    throw Error(name + ": " + e.what());
  }
}

TopicOntology LoadTopicOntology(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ontology file: " + path);
  return ReadTopicOntology(in, path);
}

}  // namespace scikg
