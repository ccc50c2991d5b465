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

#ifndef SCIKG_RESOURCES_H_
#define SCIKG_RESOURCES_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scikg/model.h"

namespace scikg {

// Occurrence counts of labels in one background corpus.
struct CorpusCounts {
  std::map<std::string, int64_t, std::less<>> counts;
  int64_t total_words = 0;

  int64_t Count(std::string_view label) const;
  // Count divided by the corpus word count.
  double Frequency(std::string_view label) const;
};

// In-domain, sibling-domain and out-of-domain tables for the genericity test.
struct BackgroundCounts {
  CorpusCounts in_domain;
  CorpusCounts sibling;
  CorpusCounts out_domain;
};

// TSV "<label>\t<count>" rows plus one "__TOTAL__\t<wordcount>" line.
CorpusCounts LoadCorpusCounts(const std::string &path);
CorpusCounts ReadCorpusCounts(std::istream &in, const std::string &name);

struct GoldStandardEntry {
  Triple triple;
  bool verdict = false;
};

// TSV "<subject>\t<relation>\t<object>\t<true|false>". Duplicate triples are
// rejected.
std::vector<GoldStandardEntry> LoadGoldStandard(const std::string &path);
std::vector<GoldStandardEntry> ReadGoldStandard(std::istream &in, const std::string &name);

// One normalized label per line; blank lines are skipped.
std::set<std::string> LoadLabelList(const std::string &path);
std::set<std::string> ReadLabelList(std::istream &in, const std::string &name);

// Two-column TSV "<key>\t<value>", both normalized. Duplicate keys are
// rejected; rows keep file order.
std::vector<std::pair<std::string, std::string>> LoadLabelPairs(const std::string &path);
std::vector<std::pair<std::string, std::string>> ReadLabelPairs(std::istream &in,
                                                                const std::string &name);

// Triple list in TSV "<subject>\t<relation>\t<object>" (extra columns ignored).
std::vector<Triple> LoadTripleList(const std::string &path);
std::vector<Triple> ReadTripleList(std::istream &in, const std::string &name);

}  // namespace scikg

#endif  // SCIKG_RESOURCES_H_
