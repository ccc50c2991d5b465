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

#include "scikg/ntriples.h"

#include <algorithm>
#include <vector>

#include "scikg/error.h"

namespace scikg {

namespace {

std::string Prefix(std::string_view ns) {
  if (ns.empty()) throw Error("empty namespace");
  std::string prefix(ns);
  if (prefix.back() != '/' && prefix.back() != '#') prefix += '/';
  return prefix;
}

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

std::string Slug(std::string_view label) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (char ch : label) {
    auto c = static_cast<unsigned char>(ch);
    if (c == ' ') {
      out += '-';
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::string Unslug(std::string_view slug) {
  std::string out;
  for (size_t i = 0; i < slug.size(); ++i) {
    char c = slug[i];
    if (c == '-') {
      out += ' ';
    } else if (c == '%') {
      int hi = i + 2 < slug.size() ? HexValue(slug[i + 1]) : -1;
      int lo = hi >= 0 ? HexValue(slug[i + 2]) : -1;
      if (lo < 0) throw Error("bad percent escape in '" + std::string(slug) + "'");
      out += static_cast<char>(hi * 16 + lo);
      i += 2;
    } else {
      out += c;
    }
  }
  return out;
}

std::string EntityIri(std::string_view ns, std::string_view label) {
  return Prefix(ns) + Slug(label);
}

std::string RelationIri(std::string_view ns, std::string_view label) {
  if (label == "skos:broader") return std::string(kSkosBroaderIri);
  return Prefix(ns) + "rel/" + Slug(label);
}

std::string SerializeNTriples(const TripleSet &triples, std::string_view ns) {
  Prefix(ns);
  std::vector<std::string> lines;
  lines.reserve(triples.size());
  for (const auto &[t, st] : triples) {
    lines.push_back("<" + EntityIri(ns, t.subject) + "> <" + RelationIri(ns, t.relation) + "> <" +
                    EntityIri(ns, t.object) + "> .");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string &line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::set<Triple> ParseNTriples(std::string_view text, std::string_view ns) {
  const std::string prefix = Prefix(ns);
  const std::string rel_prefix = prefix + "rel/";
  std::set<Triple> triples;
  size_t line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string_view> iris;
    size_t pos = 0;
    while (iris.size() < 3) {
      size_t open = line.find('<', pos);
      size_t close = open == std::string_view::npos ? open : line.find('>', open);
      if (close == std::string_view::npos) break;
      iris.push_back(line.substr(open + 1, close - open - 1));
      pos = close + 1;
    }
    std::string_view rest = iris.size() == 3 ? line.substr(pos) : std::string_view();
    if (iris.size() != 3 || rest != " .") {
      throw LocatedError("n-triples", line_no, "malformed line");
    }
    auto entity = [&](std::string_view iri) {
      if (!StartsWith(iri, prefix) || StartsWith(iri, rel_prefix)) {
        throw LocatedError("n-triples", line_no, "IRI outside namespace: " + std::string(iri));
      }
      return Unslug(iri.substr(prefix.size()));
    };
    std::string relation;
    if (iris[1] == kSkosBroaderIri) {
      relation = "skos:broader";
    } else if (StartsWith(iris[1], rel_prefix)) {
      relation = Unslug(iris[1].substr(rel_prefix.size()));
    } else {
      throw LocatedError("n-triples", line_no, "unknown predicate " + std::string(iris[1]));
    }
    triples.insert({entity(iris[0]), relation, entity(iris[2])});
  }
  return triples;
}

}  // namespace scikg
