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

#ifndef SCIKG_EMBEDDINGS_H_
#define SCIKG_EMBEDDINGS_H_

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scikg {

using Vector = std::vector<double>;

// Token -> fixed-dimension real vector. Multi-word entities are stored under
// their underscored label ("semantic_web").
class EmbeddingTable {
 public:
  explicit EmbeddingTable(int dimension);

  int dimension() const { return dimension_; }
  size_t size() const { return tokens_.size(); }

  // Throws Error on a duplicate token, wrong length or non-finite component.
  void Add(const std::string &token, std::span<const double> values);

  std::optional<std::span<const double>> Find(std::string_view token) const;
  bool Contains(std::string_view token) const { return Find(token).has_value(); }

  // Tokens in insertion order.
  const std::vector<std::string> &tokens() const { return tokens_; }

 private:
  int dimension_;
  std::vector<double> data_;
  std::vector<std::string> tokens_;
  std::map<std::string, size_t, std::less<>> index_;
};

// Text format: "<count> <dimension>" header, then "<token> <v1> ... <vD>".
EmbeddingTable LoadEmbeddings(const std::string &path);
EmbeddingTable ReadEmbeddings(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_EMBEDDINGS_H_
