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

#include "scikg/graph.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

using Json = nlohmann::ordered_json;

// Unordered entity pairs that already have a triple.
std::set<std::pair<std::string, std::string>> LinkedPairs(const TripleSet &triples) {
  std::set<std::pair<std::string, std::string>> linked;
  for (const auto &[t, st] : triples) {
    linked.emplace(std::min(t.subject, t.object), std::max(t.subject, t.object));
  }
  return linked;
}

TripleSet InferOnce(const TripleSet &triples, const TopicOntology &ontology) {
  auto linked = LinkedPairs(triples);
  TripleSet inferred;
  for (const auto &[t, st] : triples) {
    if (!ontology.IsTopic(t.object)) continue;
    for (const std::string &parent : ontology.Parents(t.object)) {
      if (parent == t.subject) continue;
      if (linked.count({std::min(t.subject, parent), std::max(t.subject, parent)}) > 0) continue;
      Triple key{t.subject, t.relation, parent};
      auto [it, inserted] = inferred.try_emplace(key);
      if (inserted) {
        it->second.triple = key;
        it->second.sources = SourceSet{TripleSource::kINFERRED};
      }
      it->second.doc_ids.insert(st.doc_ids.begin(), st.doc_ids.end());
    }
  }
  return inferred;
}

}  // namespace

TripleSet EnhanceWithSupertopics(const TripleSet &triples, const TopicOntology &ontology,
                                 bool to_fixpoint) {
  TripleSet inferred = InferOnce(triples, ontology);
  if (!to_fixpoint) return inferred;
  TripleSet all = triples;
  while (true) {
    size_t added = 0;
    for (auto &[t, st] : inferred) {
      if (all.emplace(t, st).second) ++added;
    }
    if (added == 0) break;
    TripleSet next = InferOnce(all, ontology);
    for (auto &[t, st] : next) {
      auto it = inferred.find(t);
      if (it == inferred.end()) {
        inferred.emplace(t, st);
      } else {
        it->second.doc_ids.insert(st.doc_ids.begin(), st.doc_ids.end());
      }
    }
  }
  return inferred;
}

SupportHistogram ComputeSupportHistogram(const TripleSet &triples) {
  SupportHistogram h;
  for (const auto &[t, st] : triples) {
    if (st.sources.Has(TripleSource::kEF)) ++h.ef[st.support];
    if (st.sources.Has(TripleSource::kOIE)) ++h.oie[st.support];
    if (st.sources.Has(TripleSource::kPOS) || st.sources.Has(TripleSource::kCONS)) {
      ++h.pos_cons[st.support];
    }
  }
  return h;
}

namespace {

bool IsEdgePunct(char c) {
  return c == '.' || c == ',' || c == ';' || c == ':' || c == '!' || c == '?' || c == '(' ||
         c == ')' || c == '"' || c == '\'';
}

// Splits a whitespace word into leading punctuation, core and trailing
// punctuation.
struct Word {
  std::string lead, core, trail;
};

Word SplitWord(const std::string &w) {
  size_t b = 0, e = w.size();
  while (b < e && IsEdgePunct(w[b])) ++b;
  while (e > b && IsEdgePunct(w[e - 1])) --e;
  return {w.substr(0, b), w.substr(b, e - b), w.substr(e)};
}

}  // namespace

std::string UnderscoreSentence(const std::string &text,
                               const std::set<std::string> &multiword_entities) {
  size_t max_len = 0;
  for (const std::string &e : multiword_entities) {
    max_len = std::max(max_len, SplitTokens(e).size());
  }
  std::vector<std::string> raw;
  {
    std::string cur;
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        if (!cur.empty()) raw.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) raw.push_back(std::move(cur));
  }
  if (max_len < 2) return JoinTokens(raw);

  std::vector<Word> words;
  for (const std::string &w : raw) words.push_back(SplitWord(w));
  std::vector<std::string> out;
  size_t i = 0;
  while (i < words.size()) {
    size_t matched = 0;
    for (size_t len = std::min(max_len, words.size() - i); len >= 2; --len) {
      // Inner words may not carry punctuation.
      bool clean = words[i].trail.empty() && words[i + len - 1].lead.empty();
      for (size_t k = i + 1; clean && k + 1 < i + len; ++k) {
        clean = words[k].lead.empty() && words[k].trail.empty();
      }
      if (!clean) continue;
      std::vector<std::string> cores;
      for (size_t k = i; k < i + len; ++k) cores.push_back(Lowercase(words[k].core));
      if (multiword_entities.count(JoinTokens(cores)) > 0) {
        matched = len;
        break;
      }
    }
    if (matched == 0) {
      out.push_back(raw[i]);
      ++i;
      continue;
    }
    std::string joined = words[i].lead;
    for (size_t k = i; k < i + matched; ++k) {
      if (k > i) joined += '_';
      joined += words[k].core;
    }
    joined += words[i + matched - 1].trail;
    out.push_back(std::move(joined));
    i += matched;
  }
  return JoinTokens(out);
}

void ExportUnderscoredCorpus(const std::vector<SentenceAnnotation> &sentences,
                             const std::set<std::string> &entity_universe, std::ostream &out) {
  std::set<std::string> multiword;
  for (const std::string &e : entity_universe) {
    if (e.find(' ') != std::string::npos) multiword.insert(e);
  }
  for (const SentenceAnnotation &s : sentences) out << UnderscoreSentence(s.text, multiword) << '\n';
}

void WriteProvenance(const TripleSet &triples, std::ostream &out) {
  for (const auto &[t, st] : triples) {
    Json j;
    j["s"] = t.subject;
    j["p"] = t.relation;
    j["o"] = t.object;
    j["support"] = st.support;
    Json sources = Json::array();
    for (TripleSource s : st.sources.Members()) sources.push_back(std::string(ToString(s)));
    j["sources"] = std::move(sources);
    j["doc_ids"] = st.doc_ids;
    out << j.dump() << '\n';
  }
}

TripleSet ReadProvenance(std::istream &in, const std::string &name) {
  TripleSet triples;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      SupportedTriple st;
      st.triple = {j.at("s").get<std::string>(), j.at("p").get<std::string>(),
                   j.at("o").get<std::string>()};
      st.support = j.at("support").get<int>();
      for (const auto &s : j.at("sources")) {
        auto source = ParseTripleSource(s.get<std::string>());
        if (!source) throw Error("unknown source '" + s.get<std::string>() + "'");
        st.sources.Add(*source);
      }
      for (const auto &d : j.at("doc_ids")) st.doc_ids.insert(d.get<std::string>());
      if (!triples.emplace(st.triple, st).second) throw Error("duplicate triple");
    } catch (const nlohmann::json::exception &e) {
      throw LocatedError(name, line_no, e.what());
    } catch (const Error &e) {
      throw LocatedError(name, line_no, e.what());
    }
  }
  return triples;
}

}  // namespace scikg
