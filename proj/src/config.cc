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

#include "scikg/config.h"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>

#include "scikg/error.h"

namespace scikg {

namespace {

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T ParseValue(const std::string &text, const std::string &key, const std::string &name,
             size_t line) {
  T value{};
  const char *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw LocatedError(name, line, "invalid value for '" + key + "': '" + text + "'");
  }
  return value;
}

}  // namespace

void PipelineConfig::Validate() const {
  auto require = [](bool ok, const std::string &what) {
    if (!ok) throw Error("invalid configuration: " + what);
  };
  require(!annotations.empty(), "annotations path is required");
  require(!embeddings.empty(), "embeddings path is required");
  require(!ontology.empty(), "ontology path is required");
  require(!taxonomy.empty(), "taxonomy path is required");
  require(!base_iri.empty(), "namespace must be non-empty");
  bool any_counts = !background_in_domain.empty() || !background_sibling.empty() ||
                    !background_out_domain.empty();
  bool all_counts = !background_in_domain.empty() && !background_sibling.empty() &&
                    !background_out_domain.empty();
  require(!any_counts || all_counts, "background counts need all three corpora");
  require(sibling_ratio_threshold > 0, "sibling ratio threshold must be positive");
  require(out_domain_ratio_threshold > 0, "out-of-domain ratio threshold must be positive");
  require(min_support > 0, "min_support must be positive");
  require(silhouette_target > -1 && silhouette_target <= 1,
          "silhouette_target must lie in (-1, 1]");
  require(gate_threshold > 0, "gate_threshold must be positive");
  require(classifier.hidden_units > 0, "hidden_units must be positive");
  require(classifier.max_epochs > 0, "max_epochs must be positive");
  require(classifier.batch_size > 0, "batch_size must be positive");
  require(classifier.learning_rate > 0, "learning_rate must be positive");
  require(classifier.momentum >= 0 && classifier.momentum < 1, "momentum must lie in [0, 1)");
  require(classifier.plateau_epochs > 0, "plateau_epochs must be positive");
  require(classifier.plateau_delta >= 0, "plateau_delta must be non-negative");
}

PipelineConfig ReadPipelineConfig(std::istream &in, const std::string &name,
                                  const std::string &base_dir) {
  PipelineConfig c;
  auto path = [&](std::string *field) {
    return [field, &base_dir](const std::string &v, const std::string &, size_t) {
      std::filesystem::path p(v);
      if (!v.empty() && p.is_relative() && !base_dir.empty()) {
        p = std::filesystem::path(base_dir) / p;
      }
      *field = v.empty() ? std::string() : p.lexically_normal().string();
    };
  };
  auto number = [&](auto *field) {
    return [field, &name](const std::string &v, const std::string &key, size_t line) {
      *field = ParseValue<std::remove_pointer_t<decltype(field)>>(v, key, name, line);
    };
  };
  using Setter = std::function<void(const std::string &, const std::string &, size_t)>;
  const std::map<std::string, Setter> setters = {
      {"annotations", path(&c.annotations)},
      {"embeddings", path(&c.embeddings)},
      {"ontology", path(&c.ontology)},
      {"taxonomy", path(&c.taxonomy)},
      {"background_in_domain", path(&c.background_in_domain)},
      {"background_sibling", path(&c.background_sibling)},
      {"background_out_domain", path(&c.background_out_domain)},
      {"blacklist", path(&c.blacklist)},
      {"whitelist", path(&c.whitelist)},
      {"stopwords", path(&c.stopwords)},
      {"auxiliaries", path(&c.auxiliaries)},
      {"curated_map", path(&c.curated_map)},
      {"ef_static_map", path(&c.ef_static_map)},
      {"gold", path(&c.gold)},
      {"output_dir", path(&c.output_dir)},
      {"namespace", [&c](const std::string &v, const std::string &, size_t) { c.base_iri = v; }},
      {"sibling_ratio_threshold", number(&c.sibling_ratio_threshold)},
      {"out_domain_ratio_threshold", number(&c.out_domain_ratio_threshold)},
      {"min_support", number(&c.min_support)},
      {"silhouette_target", number(&c.silhouette_target)},
      {"gate_threshold", number(&c.gate_threshold)},
      {"infer_to_fixpoint",
       [&c, &name](const std::string &v, const std::string &key, size_t line) {
         if (v == "true") {
           c.infer_to_fixpoint = true;
         } else if (v == "false") {
           c.infer_to_fixpoint = false;
         } else {
           throw LocatedError(name, line, "'" + key + "' must be true or false");
         }
       }},
      {"hidden_units", number(&c.classifier.hidden_units)},
      {"max_epochs", number(&c.classifier.max_epochs)},
      {"batch_size", number(&c.classifier.batch_size)},
      {"learning_rate", number(&c.classifier.learning_rate)},
      {"momentum", number(&c.classifier.momentum)},
      {"plateau_epochs", number(&c.classifier.plateau_epochs)},
      {"plateau_delta", number(&c.classifier.plateau_delta)},
      {"seed", number(&c.classifier.seed)},
  };
  // output_dir defaults relative to the config file as well.
  path(&c.output_dir)(c.output_dir, "output_dir", 0);

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    size_t eq = trimmed.find('=');
    if (eq == std::string::npos) throw LocatedError(name, line_no, "expected key=value");
    std::string key = Trim(trimmed.substr(0, eq));
    std::string value = Trim(trimmed.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) throw LocatedError(name, line_no, "unknown key '" + key + "'");
    it->second(value, key, line_no);
  }
  return c;
}

PipelineConfig LoadPipelineConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  std::string base = std::filesystem::path(path).parent_path().string();
  return ReadPipelineConfig(in, path, base);
}

}  // namespace scikg
