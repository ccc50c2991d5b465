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

#ifndef SCIKG_ANNOTATIONS_H_
#define SCIKG_ANNOTATIONS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "scikg/model.h"

namespace scikg {

// Reads the line-delimited sentence annotation format. One JSON object per
// line with the fields
//
//   doc_id, sent_idx, text,
//   tokens:    [{t, lemma, pos}],
//   entities:  [{start, end, label, type, source}],
//   relations: [{subj, obj, label, source}]
//
// Entity and relation labels are normalized on the way in. Every index is
// checked; any violation raises an Error naming the line and field. Output is
// sorted by (doc_id, sent_idx) and duplicate keys are rejected.
std::vector<SentenceAnnotation> LoadSentenceAnnotations(const std::string &path);
std::vector<SentenceAnnotation> ReadSentenceAnnotations(std::istream &in,
                                                        const std::string &name);

// Writes records in the same format, one per line, in the given order.
void WriteSentenceAnnotations(const std::vector<SentenceAnnotation> &sentences,
                              std::ostream &out);

}  // namespace scikg

#endif  // SCIKG_ANNOTATIONS_H_
