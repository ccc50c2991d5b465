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

#include "scikg/corpus.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "json.hpp"
#include "scikg/error.h"

namespace scikg {

using json = nlohmann::json;

DocSet TripleRecord::DocIds() const {
  DocSet docs;
  for (const auto &[doc, n] : occurrences) docs.insert(doc);
  return docs;
}

int TripleRecord::TotalOccurrences() const {
  int total = 0;
  for (const auto &[doc, n] : occurrences) total += n;
  return total;
}

const TripleTable &CorpusState::Table(TripleSource source) const {
  switch (source) {
    case TripleSource::kEF:
      return ef;
    case TripleSource::kOIE:
      return oie;
    case TripleSource::kPOS:
      return pos;
    default:
      throw Error("no raw table for source " + std::string(ToString(source)));
  }
}

TripleTable &CorpusState::Table(TripleSource source) {
  return const_cast<TripleTable &>(std::as_const(*this).Table(source));
}

std::set<std::string> CorpusState::EntityUniverse() const {
  std::set<std::string> labels;
  for (const auto &[label, record] : entities) labels.insert(label);
  return labels;
}

std::map<DocId, std::set<std::string>> CorpusState::EntitiesByDoc() const {
  std::map<DocId, std::set<std::string>> by_doc;
  for (const auto &[label, record] : entities) {
    for (const DocId &doc : record.doc_ids) by_doc[doc].insert(label);
  }
  return by_doc;
}

namespace {

void AddEntity(std::map<std::string, EntityRecord> *entities, const std::string &label,
               EntityType type, const DocId &doc) {
  auto [it, inserted] = entities->try_emplace(label);
  if (inserted || type < it->second.type) it->second.type = type;
  it->second.doc_ids.insert(doc);
}

}  // namespace

CorpusState AggregateCorpus(const std::vector<SentenceExtraction> &extractions) {
  CorpusState corpus;
  for (const SentenceExtraction &x : extractions) {
    for (const auto &[label, type] : x.entities) {
      AddEntity(&corpus.entities, label, type, x.doc_id);
    }
    for (const auto &[a, ta] : x.entities) {
      for (const auto &[b, tb] : x.entities) {
        if (a != b) corpus.pairs[{a, b}].insert(x.doc_id);
      }
    }
    auto add = [&](TripleTable &table, const std::vector<CandidateTriple> &triples) {
      for (const CandidateTriple &t : triples) {
        CheckCandidate(t);
        for (const DocId &doc : t.doc_ids) table[t.triple].occurrences[doc] += t.occurrences;
      }
    };
    add(corpus.ef, x.ef);
    add(corpus.oie, x.oie);
    add(corpus.pos, x.pos);
  }
  return corpus;
}

int ComputeSupport(const EntityPair &pair, const PairDocumentIndex &index) {
  auto it = index.find(pair);
  return it == index.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<CandidateTriple> ToCandidates(const TripleTable &table, TripleSource source) {
  std::vector<CandidateTriple> out;
  out.reserve(table.size());
  for (const auto &[triple, record] : table) {
    out.push_back({triple, source, record.DocIds(), record.TotalOccurrences()});
  }
  return out;
}

CorpusState RewriteCorpus(const CorpusState &corpus, const LabelRewriter &rewrite) {
  std::map<std::pair<DocId, std::string>, std::vector<std::string>> cache;
  auto lookup = [&](const DocId &doc, const std::string &label) -> const std::vector<std::string> & {
    auto key = std::make_pair(doc, label);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), rewrite(doc, label)).first;
    return it->second;
  };

  CorpusState out;
  for (const auto &[label, record] : corpus.entities) {
    for (const DocId &doc : record.doc_ids) {
      for (const std::string &l : lookup(doc, label)) {
        AddEntity(&out.entities, l, record.type, doc);
      }
    }
  }
  for (const auto &[pair, docs] : corpus.pairs) {
    for (const DocId &doc : docs) {
      for (const std::string &s : lookup(doc, pair.subject)) {
        for (const std::string &o : lookup(doc, pair.object)) {
          if (s != o) out.pairs[{s, o}].insert(doc);
        }
      }
    }
  }
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
    TripleTable &table = out.Table(source);
    for (const auto &[triple, record] : corpus.Table(source)) {
      for (const auto &[doc, n] : record.occurrences) {
        for (const std::string &s : lookup(doc, triple.subject)) {
          for (const std::string &o : lookup(doc, triple.object)) {
            if (s == o) continue;
            table[{s, triple.relation, o}].occurrences[doc] += n;
          }
        }
      }
    }
  }
  return out;
}

void WriteCorpus(const CorpusState &corpus, std::ostream &out) {
  for (const auto &[label, record] : corpus.entities) {
    json j = {{"kind", "entity"},
              {"label", label},
              {"type", ToString(record.type)},
              {"docs", record.doc_ids}};
    out << j.dump() << '\n';
  }
  for (const auto &[pair, docs] : corpus.pairs) {
    json j = {{"kind", "pair"}, {"s", pair.subject}, {"o", pair.object}, {"docs", docs}};
    out << j.dump() << '\n';
  }
  for (TripleSource source : {TripleSource::kEF, TripleSource::kOIE, TripleSource::kPOS}) {
    for (const auto &[triple, record] : corpus.Table(source)) {
      json j = {{"kind", "triple"},
                {"source", ToString(source)},
                {"s", triple.subject},
                {"r", triple.relation},
                {"o", triple.object},
                {"docs", record.occurrences}};
      out << j.dump() << '\n';
    }
  }
}

CorpusState ReadCorpus(std::istream &in, const std::string &name) {
  CorpusState corpus;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      std::string kind = j.at("kind").get<std::string>();
      if (kind == "entity") {
        auto type = ParseEntityType(j.at("type").get<std::string>());
        if (!type) throw Error("unknown entity type");
        EntityRecord &record = corpus.entities[j.at("label").get<std::string>()];
        record.type = *type;
        record.doc_ids = j.at("docs").get<DocSet>();
      } else if (kind == "pair") {
        corpus.pairs[{j.at("s").get<std::string>(), j.at("o").get<std::string>()}] =
            j.at("docs").get<DocSet>();
      } else if (kind == "triple") {
        auto source = ParseTripleSource(j.at("source").get<std::string>());
        if (!source || *source == TripleSource::kCONS || *source == TripleSource::kINFERRED) {
          throw Error("invalid triple source");
        }
        Triple t{j.at("s").get<std::string>(), j.at("r").get<std::string>(),
                 j.at("o").get<std::string>()};
        corpus.Table(*source)[t].occurrences = j.at("docs").get<std::map<DocId, int>>();
      } else {
        throw Error("unknown record kind '" + kind + "'");
      }
    } catch (const json::exception &e) {
      throw LocatedError(name, line_no, e.what());
    } catch (const Error &e) {
      throw LocatedError(name, line_no, e.what());
    }
  }
  return corpus;
}

}  // namespace scikg
