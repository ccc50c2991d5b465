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

#ifndef SCIKG_EVALUATE_H_
#define SCIKG_EVALUATE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "scikg/model.h"
#include "scikg/resources.h"

namespace scikg {

// Harmonic mean of precision and recall; 0 when either is 0.
double FMeasure(double precision, double recall);

// Scores `predicted` against the gold standard. Predicted triples that the
// gold standard does not list are ignored. Throws on an empty gold standard.
EvaluationReport Evaluate(const std::set<Triple> &predicted,
                          const std::vector<GoldStandardEntry> &gold);

// "<method>\t<P>\t<R>\t<F>\t<TP>\t<FP>\t<FN>" with four decimals.
std::string FormatReportRow(const std::string &method, const EvaluationReport &report);

struct GoldUniverseReport {
  size_t unique_triples = 0;
  size_t true_triples = 0;
  // Sum of method set sizes; at least unique_triples minus the unclaimed.
  size_t membership_sum = 0;
  // Gold triples that no method produced.
  size_t unclaimed = 0;
  std::map<std::string, size_t> method_sizes;
  // Problems found; empty when the checks pass.
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

// Checks that every method's output lies inside the gold universe and that
// the gold standard is the union of the method outputs plus the unclaimed
// triples.
GoldUniverseReport CheckGoldUniverse(const std::vector<GoldStandardEntry> &gold,
                                     const std::map<std::string, std::set<Triple>> &methods);

}  // namespace scikg

#endif  // SCIKG_EVALUATE_H_
