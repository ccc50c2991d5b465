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

#include "scikg/evaluate.h"

#include <cstdio>

#include "scikg/error.h"

namespace scikg {

double FMeasure(double precision, double recall) {
  if (precision <= 0 || recall <= 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

EvaluationReport Evaluate(const std::set<Triple> &predicted,
                          const std::vector<GoldStandardEntry> &gold) {
  if (gold.empty()) throw Error("empty gold standard");
  EvaluationReport r;
  for (const GoldStandardEntry &g : gold) {
    bool hit = predicted.count(g.triple) > 0;
    if (g.verdict) {
      hit ? ++r.tp : ++r.fn;
    } else if (hit) {
      ++r.fp;
    }
  }
  if (r.tp + r.fp > 0) {
    r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
  } else {
    r.degenerate = true;
  }
  if (r.tp + r.fn > 0) {
    r.recall = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
  } else {
    r.degenerate = true;
  }
  r.fmeasure = FMeasure(r.precision, r.recall);
  return r;
}

std::string FormatReportRow(const std::string &method, const EvaluationReport &report) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "\t%.4f\t%.4f\t%.4f\t%lld\t%lld\t%lld", report.precision,
                report.recall, report.fmeasure, static_cast<long long>(report.tp),
                static_cast<long long>(report.fp), static_cast<long long>(report.fn));
  return method + buf;
}

GoldUniverseReport CheckGoldUniverse(const std::vector<GoldStandardEntry> &gold,
                                     const std::map<std::string, std::set<Triple>> &methods) {
  GoldUniverseReport report;
  std::set<Triple> universe;
  for (const GoldStandardEntry &g : gold) {
    if (!universe.insert(g.triple).second) {
      report.problems.push_back("duplicate gold triple (" + g.triple.subject + ", " +
                                g.triple.relation + ", " + g.triple.object + ")");
    }
    if (g.verdict) ++report.true_triples;
  }
  report.unique_triples = universe.size();
  if (universe.empty()) report.problems.push_back("empty gold standard");

  std::set<Triple> claimed;
  for (const auto &[name, triples] : methods) {
    report.method_sizes[name] = triples.size();
    report.membership_sum += triples.size();
    size_t outside = 0;
    for (const Triple &t : triples) {
      if (universe.count(t) == 0) {
        ++outside;
      } else {
        claimed.insert(t);
      }
    }
    if (outside > 0) {
      report.problems.push_back(name + ": " + std::to_string(outside) +
                                " triples outside the gold standard");
    }
  }
  report.unclaimed = universe.size() - claimed.size();
  if (report.membership_sum + report.unclaimed < report.unique_triples) {
    report.problems.push_back("memberships do not cover the gold standard");
  }
  return report;
}

}  // namespace scikg
