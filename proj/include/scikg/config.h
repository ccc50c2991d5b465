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

#ifndef SCIKG_CONFIG_H_
#define SCIKG_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "scikg/classifier.h"

namespace scikg {

// Everything a pipeline run needs. Loaded from "key=value" lines; relative
// paths are resolved against the config file's directory. Empty optional
// paths disable the corresponding step or fall back to built-in defaults.
struct PipelineConfig {
  // Required inputs.
  std::string annotations;
  std::string embeddings;
  std::string ontology;
  std::string taxonomy;

  // Optional inputs.
  std::string background_in_domain;
  std::string background_sibling;
  std::string background_out_domain;
  std::string blacklist;
  std::string whitelist;
  std::string stopwords;
  std::string auxiliaries;
  std::string curated_map;
  std::string ef_static_map;
  std::string gold;

  std::string output_dir = "out";
  std::string base_iri = "http://example.org/scikg";

  // Genericity filter: in-domain vs sibling-domain and vs out-of-domain.
  double sibling_ratio_threshold = 2;
  double out_domain_ratio_threshold = 10;
  int min_support = 10;
  double silhouette_target = 0.65;
  double gate_threshold = 0.5;
  bool infer_to_fixpoint = false;

  ClassifierParams classifier;

  // Throws Error when a threshold is out of range.
  void Validate() const;
};

PipelineConfig LoadPipelineConfig(const std::string &path);
PipelineConfig ReadPipelineConfig(std::istream &in, const std::string &name,
                                  const std::string &base_dir);

}  // namespace scikg

#endif  // SCIKG_CONFIG_H_
