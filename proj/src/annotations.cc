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

#include "scikg/annotations.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <utility>

#include "json.hpp"
#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

using json = nlohmann::json;

namespace {

class RecordParser {
 public:
  RecordParser(const std::string &name, size_t line) : name_(name), line_(line) {}

  SentenceAnnotation Parse(const json &record) {
    if (!record.is_object()) Fail("record", "expected a JSON object");
    SentenceAnnotation s;
    s.doc_id = String(record, "doc_id", "doc_id");
    if (s.doc_id.empty()) Fail("doc_id", "must be non-empty");
    s.sent_idx = Int(record, "sent_idx", "sent_idx");
    if (s.sent_idx < 0) Fail("sent_idx", "must be non-negative");
    s.text = String(record, "text", "text");

    const json &tokens = Array(record, "tokens", "tokens");
    for (size_t i = 0; i < tokens.size(); ++i) {
      std::string where = "tokens[" + std::to_string(i) + "]";
      Token token;
      token.surface = String(tokens[i], "t", where + ".t");
      token.lemma = String(tokens[i], "lemma", where + ".lemma");
      token.pos = String(tokens[i], "pos", where + ".pos");
      if (token.surface.empty()) Fail(where + ".t", "must be non-empty");
      if (token.lemma.empty()) Fail(where + ".lemma", "must be non-empty");
      if (token.pos.empty()) Fail(where + ".pos", "must be non-empty");
      s.tokens.push_back(std::move(token));
    }

    const int num_tokens = static_cast<int>(s.tokens.size());
    const json &entities = Array(record, "entities", "entities");
    for (size_t i = 0; i < entities.size(); ++i) {
      std::string where = "entities[" + std::to_string(i) + "]";
      EntityMention m;
      m.start_token = Int(entities[i], "start", where + ".start");
      m.end_token = Int(entities[i], "end", where + ".end");
      if (m.start_token < 0 || m.start_token >= m.end_token ||
          m.end_token > num_tokens) {
        Fail(where, "span [" + std::to_string(m.start_token) + ", " +
                        std::to_string(m.end_token) + ") outside " +
                        std::to_string(num_tokens) + " tokens");
      }
      m.label = Label(entities[i], "label", where + ".label");
      std::string type = String(entities[i], "type", where + ".type");
      auto parsed_type = ParseEntityType(type);
      if (!parsed_type) Fail(where + ".type", "unknown entity type '" + type + "'");
      m.type = *parsed_type;
      std::string source = String(entities[i], "source", where + ".source");
      auto parsed_source = ParseMentionSource(source);
      if (!parsed_source) Fail(where + ".source", "unknown source '" + source + "'");
      m.source = *parsed_source;
      s.entities.push_back(std::move(m));
    }

    const int num_entities = static_cast<int>(s.entities.size());
    const json &relations = Array(record, "relations", "relations");
    for (size_t i = 0; i < relations.size(); ++i) {
      std::string where = "relations[" + std::to_string(i) + "]";
      RawRelation r;
      r.subject = Int(relations[i], "subj", where + ".subj");
      r.object = Int(relations[i], "obj", where + ".obj");
      if (r.subject < 0 || r.subject >= num_entities) {
        Fail(where + ".subj", "entity index " + std::to_string(r.subject) +
                                  " out of range for " +
                                  std::to_string(num_entities) + " entities");
      }
      if (r.object < 0 || r.object >= num_entities) {
        Fail(where + ".obj", "entity index " + std::to_string(r.object) +
                                 " out of range for " +
                                 std::to_string(num_entities) + " entities");
      }
      r.label = Label(relations[i], "label", where + ".label");
      std::string source = String(relations[i], "source", where + ".source");
      auto parsed = ParseMentionSource(source);
      if (!parsed || *parsed == MentionSource::kCSO) {
        Fail(where + ".source", "relation source must be EF or OIE, got '" +
                                    source + "'");
      }
      r.source = *parsed;
      s.relations.push_back(std::move(r));
    }
    return s;
  }

 private:
  [[noreturn]] void Fail(const std::string &field, const std::string &what) {
    throw LocatedError(name_, line_, "field '" + field + "': " + what);
  }

  const json &Member(const json &obj, const char *key, const std::string &where) {
    if (!obj.is_object()) Fail(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) Fail(where, "missing");
    return *it;
  }

  std::string String(const json &obj, const char *key, const std::string &where) {
    const json &v = Member(obj, key, where);
    if (!v.is_string()) Fail(where, "expected a string");
    return v.get<std::string>();
  }

  int Int(const json &obj, const char *key, const std::string &where) {
    const json &v = Member(obj, key, where);
    if (!v.is_number_integer()) Fail(where, "expected an integer");
    return v.get<int>();
  }

  const json &Array(const json &obj, const char *key, const std::string &where) {
    const json &v = Member(obj, key, where);
    if (!v.is_array()) Fail(where, "expected an array");
    return v;
  }

  std::string Label(const json &obj, const char *key, const std::string &where) {
    auto normalized = NormalizeLabel(String(obj, key, where));
    if (!normalized) Fail(where, "empty label");
    return *normalized;
  }

  const std::string &name_;
  size_t line_;
};

}  // namespace

std::vector<SentenceAnnotation> ReadSentenceAnnotations(std::istream &in,
                                                        const std::string &name) {
  std::vector<std::pair<SentenceAnnotation, size_t>> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error &e) {
      throw LocatedError(name, line_no, std::string("malformed JSON: ") + e.what());
    }
    RecordParser parser(name, line_no);
    records.emplace_back(parser.Parse(record), line_no);
  }

  std::sort(records.begin(), records.end(), [](const auto &a, const auto &b) {
    if (a.first.doc_id != b.first.doc_id) return a.first.doc_id < b.first.doc_id;
    if (a.first.sent_idx != b.first.sent_idx) {
      return a.first.sent_idx < b.first.sent_idx;
    }
    return a.second < b.second;
  });

  std::vector<SentenceAnnotation> out;
  out.reserve(records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    if (i + 1 < records.size() && records[i + 1].first.doc_id == records[i].first.doc_id &&
        records[i + 1].first.sent_idx == records[i].first.sent_idx) {
      throw LocatedError(name, records[i + 1].second,
                         "duplicate (doc_id, sent_idx) = (" +
                             records[i].first.doc_id + ", " +
                             std::to_string(records[i].first.sent_idx) +
                             "), first seen at line " +
                             std::to_string(records[i].second));
    }
    out.push_back(std::move(records[i].first));
  }
  return out;
}

std::vector<SentenceAnnotation> LoadSentenceAnnotations(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open annotation file: " + path);
  return ReadSentenceAnnotations(in, path);
}

void WriteSentenceAnnotations(const std::vector<SentenceAnnotation> &sentences,
                              std::ostream &out) {
  for (const SentenceAnnotation &s : sentences) {
    json tokens = json::array();
    for (const Token &t : s.tokens) {
      tokens.push_back({{"t", t.surface}, {"lemma", t.lemma}, {"pos", t.pos}});
    }
    json entities = json::array();
    for (const EntityMention &m : s.entities) {
      entities.push_back({{"start", m.start_token},
                          {"end", m.end_token},
                          {"label", m.label},
                          {"type", ToString(m.type)},
                          {"source", ToString(m.source)}});
    }
    json relations = json::array();
    for (const RawRelation &r : s.relations) {
      relations.push_back({{"subj", r.subject},
                           {"obj", r.object},
                           {"label", r.label},
                           {"source", ToString(r.source)}});
    }
    json record = {{"doc_id", s.doc_id},     {"sent_idx", s.sent_idx},
                   {"text", s.text},         {"tokens", std::move(tokens)},
                   {"entities", std::move(entities)},
                   {"relations", std::move(relations)}};
    out << record.dump() << '\n';
  }
}

}  // namespace scikg
