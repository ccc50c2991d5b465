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

#ifndef SCIKG_NTRIPLES_H_
#define SCIKG_NTRIPLES_H_

#include <set>
#include <string>
#include <string_view>

#include "scikg/model.h"
#include "scikg/select.h"

namespace scikg {

inline constexpr std::string_view kSkosBroaderIri = "http://www.w3.org/2004/02/skos/core#broader";

// Spaces become '-', bytes outside [a-z0-9-] become %XX.
std::string Slug(std::string_view label);
// Inverse of Slug for labels without a literal '-'.
std::string Unslug(std::string_view slug);

// namespace + "/" + slug (no extra '/' after a trailing '/' or '#').
std::string EntityIri(std::string_view ns, std::string_view label);
// namespace + "/rel/" + slug; "skos:broader" is the SKOS broader IRI.
std::string RelationIri(std::string_view ns, std::string_view label);

// One "<s> <p> <o> ." line per triple, lines sorted. Throws on an empty
// namespace.
std::string SerializeNTriples(const TripleSet &triples, std::string_view ns);

// Parses output of SerializeNTriples back into labels.
std::set<Triple> ParseNTriples(std::string_view text, std::string_view ns);

}  // namespace scikg

#endif  // SCIKG_NTRIPLES_H_
