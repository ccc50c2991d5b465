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

#ifndef SCIKG_ONTOLOGY_H_
#define SCIKG_ONTOLOGY_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scikg {

// Research-topic ontology: topic labels, direct superTopicOf edges (kept as
// child -> parents) and alternative-label groups.
class TopicOntology {
 public:
  TopicOntology() = default;

  // Validates the edge set (must be acyclic) and the alternative groups (a
  // label may belong to one group only). `alt_labels` pairs a label with the
  // representative naming its group; the representative is itself a member.
  static TopicOntology Build(
      const std::vector<std::pair<std::string, std::string>> &child_parent,
      const std::vector<std::pair<std::string, std::string>> &alt_labels);

  const std::set<std::string, std::less<>> &topics() const { return topics_; }
  bool IsTopic(std::string_view label) const { return topics_.count(label) > 0; }

  // Direct super-topics, sorted. Empty for roots and unknown labels.
  const std::vector<std::string> &Parents(std::string_view label) const;

  // All transitive super-topics (excluding the label itself), sorted.
  std::set<std::string> Ancestors(std::string_view label) const;

  // The alternatives A_e of the label's group, sorted; nullptr if the label
  // has no group.
  const std::vector<std::string> *Alternatives(std::string_view label) const;

  const std::set<std::pair<std::string, std::string>> &edges() const {
    return edges_;
  }

 private:
  std::set<std::string, std::less<>> topics_;
  std::set<std::pair<std::string, std::string>> edges_;
  std::map<std::string, std::vector<std::string>, std::less<>> parents_;
  std::vector<std::vector<std::string>> groups_;
  std::map<std::string, size_t, std::less<>> group_of_;
};

// TSV rows "<child>\tsuperTopicOf\t<parent>" and
// "<label>\taltLabel\t<group-representative>". Labels are normalized.
TopicOntology LoadTopicOntology(const std::string &path);
TopicOntology ReadTopicOntology(std::istream &in, const std::string &name);

// Finds one directed cycle in a child -> parents graph, returned as the
// closed node sequence (first == last). Empty when the graph is acyclic.
std::vector<std::string> FindCycle(
    const std::map<std::string, std::vector<std::string>, std::less<>> &parents);

// Splits a TSV line into fields.
std::vector<std::string> SplitTsv(const std::string &line);

}  // namespace scikg

#endif  // SCIKG_ONTOLOGY_H_
