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

#include "scikg/embeddings.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

#include "scikg/error.h"
#include "scikg/labels.h"

namespace scikg {

namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view field, T *value) {
  const char *end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

}  // namespace

EmbeddingTable::EmbeddingTable(int dimension) : dimension_(dimension) {
  if (dimension <= 0) throw Error("embedding dimension must be positive");
}

void EmbeddingTable::Add(const std::string &token, std::span<const double> values) {
  if (static_cast<int>(values.size()) != dimension_) {
    throw Error("embedding for '" + token + "' has " +
                std::to_string(values.size()) + " components, expected " +
                std::to_string(dimension_));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error("embedding for '" + token + "' has a non-finite component");
    }
  }
  if (index_.count(token) > 0) {
    throw Error("duplicate embedding token '" + token + "'");
  }
  index_.emplace(token, tokens_.size());
  tokens_.push_back(token);
  data_.insert(data_.end(), values.begin(), values.end());
}

std::optional<std::span<const double>> EmbeddingTable::Find(
    std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dimension_,
                                 static_cast<size_t>(dimension_));
}

EmbeddingTable ReadEmbeddings(std::istream &in, const std::string &name) {
  std::string line;
  size_t line_no = 0;
  std::vector<std::string_view> header;
  while (header.empty()) {
    if (!std::getline(in, line)) throw LocatedError(name, line_no + 1, "missing header");
    ++line_no;
    header = SplitFields(line);
  }
  long count = 0;
  int dimension = 0;
  if (header.size() != 2 || !ParseNumber(header[0], &count) ||
      !ParseNumber(header[1], &dimension) || count < 0 || dimension <= 0) {
    throw LocatedError(name, line_no, "header must be '<count> <dimension>'");
  }

  EmbeddingTable table(dimension);
  std::vector<double> values(dimension);
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    std::string token(fields[0]);
    if (static_cast<int>(fields.size()) - 1 != dimension) {
      throw LocatedError(name, line_no,
                         "token '" + token + "' has " +
                             std::to_string(fields.size() - 1) +
                             " components, expected " + std::to_string(dimension));
    }
    if (Lowercase(token) != token) {
      throw LocatedError(name, line_no, "token '" + token + "' is not lowercase");
    }
    for (int i = 0; i < dimension; ++i) {
      if (!ParseNumber(fields[i + 1], &values[i])) {
        throw LocatedError(name, line_no,
                           "token '" + token + "': component " + std::to_string(i + 1) +
                               " is not a number: '" + std::string(fields[i + 1]) + "'");
      }
    }
    try {
      table.Add(token, values);
    } catch (const Error &e) {
      throw LocatedError(name, line_no, e.what());
    }
  }
  if (static_cast<long>(table.size()) != count) {
    throw LocatedError(name, line_no,
                       "header declares " + std::to_string(count) + " entries, found " +
                           std::to_string(table.size()));
  }
  return table;
}

EmbeddingTable LoadEmbeddings(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open embedding file: " + path);
  return ReadEmbeddings(in, path);
}

}  // namespace scikg
