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

#include "scikg/refine.h"

#include <algorithm>
#include <cctype>
#include <limits>

#include "scikg/labels.h"

namespace scikg {

namespace {

bool IsStrippedAscii(char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?': case '\'':
    case '"': case '`': case '(': case ')': case '[': case ']': case '{': case '}':
      return true;
    default:
      return false;
  }
}

// Curly quotes, encoded in UTF-8.
constexpr std::string_view kUnicodeQuotes[] = {"\xE2\x80\x98", "\xE2\x80\x99",
                                               "\xE2\x80\x9C", "\xE2\x80\x9D"};

// Number of bytes of punctuation starting at label[i], 0 if none.
size_t PunctuationAt(const std::string &label, size_t i) {
  // Possessive 's (ASCII or curly apostrophe) at a word end.
  for (std::string_view apostrophe : {std::string_view("'"), kUnicodeQuotes[1]}) {
    size_t n = apostrophe.size();
    if (label.compare(i, n, apostrophe) == 0 && i + n < label.size() && label[i + n] == 's' &&
        (i + n + 1 == label.size() ||
         !std::isalnum(static_cast<unsigned char>(label[i + n + 1])))) {
      return n + 1;
    }
  }
  for (std::string_view quote : kUnicodeQuotes) {
    if (label.compare(i, quote.size(), quote) == 0) return quote.size();
  }
  return IsStrippedAscii(label[i]) ? 1 : 0;
}

std::string StripPunctuation(const std::string &label) {
  std::string out;
  out.reserve(label.size());
  for (size_t i = 0; i < label.size();) {
    size_t skip = PunctuationAt(label, i);
    if (skip == 0) {
      out.push_back(label[i]);
      skip = 1;
    }
    i += skip;
  }
  return out;
}

std::vector<std::string> SplitWords(const std::string &text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::string TrimWordPunctuation(const std::string &word) {
  size_t b = 0, e = word.size();
  while (b < e && !std::isalnum(static_cast<unsigned char>(word[b]))) ++b;
  while (e > b && !std::isalnum(static_cast<unsigned char>(word[e - 1]))) --e;
  return word.substr(b, e - b);
}

// Acronym candidate: 2-10 alphanumerics starting with a letter, at least two
// letters, more than half of them uppercase.
bool LooksLikeAcronym(const std::string &s) {
  if (s.size() < 2 || s.size() > 10 || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  int letters = 0, upper = 0;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u)) return false;
    if (std::isalpha(u)) {
      ++letters;
      if (std::isupper(u)) ++upper;
    }
  }
  return letters >= 2 && 2 * upper > letters;
}

// Matches the acronym letters against the initials of the words preceding
// position `end`, right to left. Returns the expansion or nullopt.
std::optional<std::string> MatchExpansion(const std::vector<std::string> &words, size_t end,
                                          const std::string &acronym,
                                          const std::set<std::string> &stopwords) {
  std::string letters;
  for (char c : acronym) {
    if (std::isalpha(static_cast<unsigned char>(c))) {
      letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  int want = static_cast<int>(letters.size()) - 1;
  size_t k = end;
  while (k > 0 && want >= 0) {
    --k;
    std::string word = Lowercase(TrimWordPunctuation(words[k]));
    if (word.empty()) return std::nullopt;
    if (word[0] == letters[want]) {
      --want;
      if (want < 0) {
        std::vector<std::string> span;
        for (size_t j = k; j < end; ++j) {
          std::string w = Lowercase(TrimWordPunctuation(words[j]));
          if (!w.empty()) span.push_back(w);
        }
        auto label = NormalizeLabel(JoinTokens(span));
        if (!label) return std::nullopt;
        return label;
      }
    } else if (stopwords.count(word) == 0) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// Fallback for acronyms whose letters are not in word order, as in
// "Web Ontology Language (OWL)": the n words right before the acronym must
// have exactly its n letters as initials, in any order.
std::optional<std::string> MatchPermutedInitials(const std::vector<std::string> &words,
                                                 size_t end, const std::string &acronym) {
  std::string letters;
  for (char c : acronym) {
    if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
    letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (end < letters.size()) return std::nullopt;
  std::string initials;
  std::vector<std::string> span;
  for (size_t j = end - letters.size(); j < end; ++j) {
    std::string w = Lowercase(TrimWordPunctuation(words[j]));
    if (w.empty() || w != Lowercase(words[j])) return std::nullopt;
    initials.push_back(w[0]);
    span.push_back(w);
  }
  std::sort(letters.begin(), letters.end());
  std::sort(initials.begin(), initials.end());
  if (letters != initials) return std::nullopt;
  return NormalizeLabel(JoinTokens(span));
}

}  // namespace

std::optional<std::string> CleanEntity(const std::string &label,
                                       const std::set<std::string> &blacklist,
                                       const std::set<std::string> &stopwords) {
  if (blacklist.count(label) > 0) return std::nullopt;
  auto stripped = NormalizeLabel(StripPunctuation(label));
  if (!stripped) return std::nullopt;
  std::vector<std::string> tokens = SplitTokens(*stripped);
  size_t b = 0, e = tokens.size();
  while (b < e && stopwords.count(tokens[b]) > 0) ++b;
  while (e > b && stopwords.count(tokens[e - 1]) > 0) --e;
  if (b == e) return std::nullopt;
  std::vector<std::string> kept(tokens.begin() + b, tokens.begin() + e);
  auto cleaned = NormalizeLabel(JoinTokens(kept));
  if (!cleaned || blacklist.count(*cleaned) > 0) return std::nullopt;
  return cleaned;
}

std::vector<std::string> SplitEntity(const std::string &label,
                                     const std::set<std::string> &blacklist,
                                     const std::set<std::string> &stopwords) {
  std::vector<std::string> parts;
  std::vector<std::string> current;
  auto flush = [&]() {
    if (current.empty()) return;
    if (auto part = CleanEntity(JoinTokens(current), blacklist, stopwords)) {
      if (std::find(parts.begin(), parts.end(), *part) == parts.end()) parts.push_back(*part);
    }
    current.clear();
  };
  for (const std::string &token : SplitTokens(label)) {
    if (token == "and") {
      flush();
    } else {
      current.push_back(token);
    }
  }
  flush();
  return parts;
}

AcronymMap BuildAcronymMap(const std::vector<std::string> &texts,
                           const std::set<std::string> &stopwords) {
  AcronymMap acronyms;
  for (const std::string &text : texts) {
    std::vector<std::string> words = SplitWords(text);
    for (size_t i = 0; i < words.size(); ++i) {
      const std::string &w = words[i];
      if (w.size() < 4 || w.front() != '(') continue;
      size_t close = w.find(')');
      if (close == std::string::npos) continue;
      std::string candidate = w.substr(1, close - 1);
      if (!LooksLikeAcronym(candidate)) continue;
      auto expansion = MatchExpansion(words, i, candidate, stopwords);
      if (!expansion) expansion = MatchPermutedInitials(words, i, candidate);
      if (!expansion) continue;
      acronyms.emplace(Lowercase(candidate), *expansion);
    }
  }
  return acronyms;
}

std::string ExpandAcronyms(const std::string &label, const AcronymMap &acronyms) {
  if (acronyms.empty()) return label;
  std::vector<std::string> out;
  for (const std::string &token : SplitTokens(label)) {
    auto it = acronyms.find(token);
    if (it == acronyms.end()) {
      out.push_back(token);
      continue;
    }
    std::vector<std::string> expansion = SplitTokens(it->second);
    bool preceded = out.size() >= expansion.size() &&
                    std::equal(expansion.begin(), expansion.end(),
                               out.end() - static_cast<long>(expansion.size()));
    if (!preceded) out.insert(out.end(), expansion.begin(), expansion.end());
  }
  return JoinTokens(out);
}

std::vector<std::string> ExpandAcronyms(const std::vector<std::string> &labels,
                                        const AcronymMap &acronyms) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const std::string &label : labels) out.push_back(ExpandAcronyms(label, acronyms));
  return out;
}

GenericityStats ComputeGenericity(const std::string &label, const BackgroundCounts &counts) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  GenericityStats s;
  s.in_domain = counts.in_domain.Frequency(label);
  s.sibling = counts.sibling.Frequency(label);
  s.out_domain = counts.out_domain.Frequency(label);
  s.sibling_ratio = s.sibling > 0 ? s.in_domain / s.sibling : kInf;
  s.out_domain_ratio = s.out_domain > 0 ? s.in_domain / s.out_domain : kInf;
  return s;
}

GenericityVerdict GenericityFilter(const std::string &label, const BackgroundCounts &counts,
                                   const std::set<std::string> &whitelist,
                                   double sibling_threshold, double out_domain_threshold) {
  if (whitelist.count(label) > 0) return GenericityVerdict::kKeep;
  GenericityStats s = ComputeGenericity(label, counts);
  if (s.in_domain <= 0) return GenericityVerdict::kDrop;
  bool keep = s.sibling_ratio >= sibling_threshold && s.out_domain_ratio >= out_domain_threshold;
  return keep ? GenericityVerdict::kKeep : GenericityVerdict::kDrop;
}

std::vector<std::string> RefineEntity(const std::string &label, const AcronymMap &acronyms,
                                      const RefinerOptions &options) {
  if (options.blacklist.count(label) > 0) return {};
  if (options.whitelist.count(label) > 0) return {label};
  auto cleaned = CleanEntity(label, options.blacklist, options.stopwords);
  if (!cleaned) return {};
  if (options.whitelist.count(*cleaned) > 0) return {*cleaned};

  std::vector<std::string> out;
  for (const std::string &part :
       SplitEntity(*cleaned, options.blacklist, options.stopwords)) {
    std::string expanded = ExpandAcronyms(part, acronyms);
    if (options.blacklist.count(expanded) > 0) continue;
    if (options.counts &&
        GenericityFilter(expanded, *options.counts, options.whitelist,
                         options.sibling_threshold,
                         options.out_domain_threshold) == GenericityVerdict::kDrop) {
      continue;
    }
    if (std::find(out.begin(), out.end(), expanded) == out.end()) out.push_back(expanded);
  }
  return out;
}

CorpusState RefineCorpus(const CorpusState &corpus,
                         const std::vector<SentenceAnnotation> &sentences,
                         const RefinerOptions &options) {
  std::map<DocId, std::vector<std::string>> texts;
  for (const SentenceAnnotation &s : sentences) texts[s.doc_id].push_back(s.text);
  std::map<DocId, AcronymMap> acronyms;
  for (const auto &[doc, doc_texts] : texts) {
    acronyms[doc] = BuildAcronymMap(doc_texts, options.stopwords);
  }
  const AcronymMap kNone;
  return RewriteCorpus(corpus, [&](const DocId &doc, const std::string &label) {
    auto it = acronyms.find(doc);
    return RefineEntity(label, it == acronyms.end() ? kNone : it->second, options);
  });
}

}  // namespace scikg
