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

#include "scikg/resources.h"

#include <charconv>
#include <fstream>
#include <istream>

#include "scikg/error.h"
#include "scikg/labels.h"
#include "scikg/ontology.h"

namespace scikg {

namespace {

bool IsBlank(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::ifstream Open(const std::string &path, const char *what) {
  std::ifstream in(path);
  if (!in) throw Error(std::string("cannot open ") + what + ": " + path);
  return in;
}

std::string RequireLabel(const std::string &raw, const std::string &name, size_t line) {
  auto label = NormalizeLabel(raw);
  if (!label) throw LocatedError(name, line, "empty label");
  return *label;
}

}  // namespace

int64_t CorpusCounts::Count(std::string_view label) const {
  auto it = counts.find(label);
  return it == counts.end() ? 0 : it->second;
}

double CorpusCounts::Frequency(std::string_view label) const {
  return static_cast<double>(Count(label)) / static_cast<double>(total_words);
}

CorpusCounts ReadCorpusCounts(std::istream &in, const std::string &name) {
  CorpusCounts c;
  bool have_total = false;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 2) throw LocatedError(name, line_no, "expected '<label>\\t<count>'");
    int64_t value = 0;
    const char *end = f[1].data() + f[1].size();
    auto [ptr, ec] = std::from_chars(f[1].data(), end, value);
    if (ec != std::errc() || ptr != end || value < 0) {
      throw LocatedError(name, line_no, "count must be a non-negative integer");
    }
    if (f[0] == "__TOTAL__") {
      if (have_total) throw LocatedError(name, line_no, "duplicate __TOTAL__ line");
      if (value <= 0) throw LocatedError(name, line_no, "total word count must be positive");
      c.total_words = value;
      have_total = true;
      continue;
    }
    std::string label = RequireLabel(f[0], name, line_no);
    if (!c.counts.emplace(label, value).second) {
      throw LocatedError(name, line_no, "duplicate label '" + label + "'");
    }
  }
  if (!have_total) throw Error(name + ": missing __TOTAL__ line");
  return c;
}

CorpusCounts LoadCorpusCounts(const std::string &path) {
  std::ifstream in = Open(path, "background count file");
  return ReadCorpusCounts(in, path);
}

std::vector<GoldStandardEntry> ReadGoldStandard(std::istream &in, const std::string &name) {
  std::vector<GoldStandardEntry> entries;
  std::map<Triple, size_t> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 4) {
      throw LocatedError(name, line_no, "expected '<subject>\\t<relation>\\t<object>\\t<verdict>'");
    }
    GoldStandardEntry e;
    e.triple = {RequireLabel(f[0], name, line_no), RequireLabel(f[1], name, line_no),
                RequireLabel(f[2], name, line_no)};
    if (f[3] == "true") {
      e.verdict = true;
    } else if (f[3] == "false") {
      e.verdict = false;
    } else {
      throw LocatedError(name, line_no, "verdict must be 'true' or 'false', got '" + f[3] + "'");
    }
    auto [it, inserted] = seen.emplace(e.triple, line_no);
    if (!inserted) {
      throw LocatedError(name, line_no,
                         "duplicate triple, first seen at line " + std::to_string(it->second));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<GoldStandardEntry> LoadGoldStandard(const std::string &path) {
  std::ifstream in = Open(path, "gold standard");
  return ReadGoldStandard(in, path);
}

std::set<std::string> ReadLabelList(std::istream &in, const std::string &name) {
  std::set<std::string> labels;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    labels.insert(RequireLabel(line, name, line_no));
  }
  return labels;
}

std::set<std::string> LoadLabelList(const std::string &path) {
  std::ifstream in = Open(path, "label list");
  return ReadLabelList(in, path);
}

std::vector<std::pair<std::string, std::string>> ReadLabelPairs(std::istream &in,
                                                                const std::string &name) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::string, size_t> seen;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() != 2) throw LocatedError(name, line_no, "expected '<key>\\t<value>'");
    std::string key = RequireLabel(f[0], name, line_no);
    std::string value = RequireLabel(f[1], name, line_no);
    if (!seen.emplace(key, line_no).second) {
      throw LocatedError(name, line_no, "duplicate key '" + key + "'");
    }
    pairs.emplace_back(std::move(key), std::move(value));
  }
  return pairs;
}

std::vector<std::pair<std::string, std::string>> LoadLabelPairs(const std::string &path) {
  std::ifstream in = Open(path, "label map");
  return ReadLabelPairs(in, path);
}

std::vector<Triple> ReadTripleList(std::istream &in, const std::string &name) {
  std::vector<Triple> triples;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;
    std::vector<std::string> f = SplitTsv(line);
    if (f.size() < 3) throw LocatedError(name, line_no, "expected at least 3 fields");
    triples.push_back({RequireLabel(f[0], name, line_no), RequireLabel(f[1], name, line_no),
                       RequireLabel(f[2], name, line_no)});
  }
  return triples;
}

std::vector<Triple> LoadTripleList(const std::string &path) {
  std::ifstream in = Open(path, "triple list");
  return ReadTripleList(in, path);
}

}  // namespace scikg
