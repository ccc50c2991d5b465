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

#ifndef SCIKG_TESTS_TEST_UTIL_H_
#define SCIKG_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scikg/embeddings.h"
#include "scikg/labels.h"
#include "scikg/model.h"

namespace scikg {
namespace testing {

inline std::string DataPath(const std::string &relative) {
  return std::string(SCIKG_TEST_DATA) + "/" + relative;
}

inline std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("scikg-test-" + std::to_string(getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  std::string path() const { return path_.string(); }
  std::string File(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

// Builds a sentence from "word/TAG" or "word/TAG/lemma" items separated by
// spaces. The lemma defaults to the lowercased word.
inline SentenceAnnotation TaggedSentence(const std::string &doc, int idx,
                                         const std::string &tagged) {
  SentenceAnnotation s;
  s.doc_id = doc;
  s.sent_idx = idx;
  std::istringstream in(tagged);
  std::string item;
  std::vector<std::string> words;
  while (in >> item) {
    size_t a = item.find('/');
    size_t b = item.find('/', a + 1);
    Token t;
    t.surface = item.substr(0, a);
    t.pos = item.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1);
    t.lemma = b == std::string::npos ? Lowercase(t.surface) : item.substr(b + 1);
    words.push_back(t.surface);
    s.tokens.push_back(t);
  }
  s.text = JoinTokens(words);
  return s;
}

inline int AddMention(SentenceAnnotation *s, int start, int end, const std::string &label,
                      EntityType type = EntityType::kMethod,
                      MentionSource source = MentionSource::kEF) {
  s->entities.push_back({start, end, label, type, source});
  return static_cast<int>(s->entities.size()) - 1;
}

inline EmbeddingTable MakeTable(
    int dim, std::initializer_list<std::pair<std::string, std::vector<double>>> rows) {
  EmbeddingTable table(dim);
  for (const auto &[token, values] : rows) table.Add(token, values);
  return table;
}

}  // namespace testing
}  // namespace scikg

#endif  // SCIKG_TESTS_TEST_UTIL_H_
