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

#include "scikg/clustering.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "scikg/error.h"
#include "scikg/labels.h"
#include "scikg/relations.h"

namespace scikg {

DistanceMatrix CosineDistances(const std::vector<Vector> &vectors) {
  size_t n = vectors.size();
  DistanceMatrix d(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = 1.0 - CosineSimilarity(vectors[i], vectors[j]);
    }
  }
  return d;
}

std::vector<double> ElementSilhouettes(const std::vector<int> &assignment,
                                       const DistanceMatrix &distances) {
  size_t n = assignment.size();
  std::map<int, std::vector<size_t>> members;
  for (size_t i = 0; i < n; ++i) members[assignment[i]].push_back(i);
  if (members.size() < 2) throw Error("silhouette is undefined for a single cluster");

  std::vector<double> s(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    const std::vector<size_t> &own = members[assignment[i]];
    if (own.size() == 1) continue;
    double within = 0;
    for (size_t j : own) {
      if (j != i) within += distances[i][j];
    }
    within /= static_cast<double>(own.size() - 1);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto &[id, other] : members) {
      if (id == assignment[i]) continue;
      double sum = 0;
      for (size_t j : other) sum += distances[i][j];
      nearest = std::min(nearest, sum / static_cast<double>(other.size()));
    }
    double denom = std::max(within, nearest);
    s[i] = denom == 0 ? 0.0 : (nearest - within) / denom;
  }
  return s;
}

std::vector<std::vector<int>> AgglomerativePartitions(const DistanceMatrix &distances) {
  size_t n = distances.size();
  std::vector<std::vector<int>> result;
  if (n == 0) return result;

  std::vector<int> assignment(n);
  for (size_t i = 0; i < n; ++i) assignment[i] = static_cast<int>(i);
  result.push_back(assignment);

  // Active clusters are indexed by their smallest member; `link` holds the
  // average linkage between active clusters.
  DistanceMatrix link = distances;
  std::vector<size_t> size(n, 1);
  std::vector<bool> active(n, true);
  for (size_t step = 1; step < n; ++step) {
    size_t best_a = 0, best_b = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t a = 0; a < n; ++a) {
      if (!active[a]) continue;
      for (size_t b = a + 1; b < n; ++b) {
        if (!active[b]) continue;
        if (link[a][b] < best) {
          best = link[a][b];
          best_a = a;
          best_b = b;
        }
      }
    }
    // best_a < best_b, so the merged cluster keeps id best_a.
    for (size_t k = 0; k < n; ++k) {
      if (!active[k] || k == best_a || k == best_b) continue;
      double merged = (static_cast<double>(size[best_a]) * link[k][best_a] +
                       static_cast<double>(size[best_b]) * link[k][best_b]) /
                      static_cast<double>(size[best_a] + size[best_b]);
      link[k][best_a] = link[best_a][k] = merged;
    }
    size[best_a] += size[best_b];
    active[best_b] = false;
    for (int &id : assignment) {
      if (id == static_cast<int>(best_b)) id = static_cast<int>(best_a);
    }
    result.push_back(assignment);
  }
  return result;
}

namespace {

ClusterPartition MakePartition(const std::vector<std::string> &labels,
                               const std::vector<int> &assignment,
                               const std::vector<double> *element_scores) {
  std::map<int, std::vector<size_t>> members;
  for (size_t i = 0; i < assignment.size(); ++i) members[assignment[i]].push_back(i);
  ClusterPartition p;
  for (const auto &[id, idx] : members) {
    std::vector<std::string> cluster;
    double sum = 0;
    for (size_t i : idx) {
      cluster.push_back(labels[i]);
      if (element_scores != nullptr) sum += (*element_scores)[i];
    }
    p.clusters.push_back(std::move(cluster));
    if (element_scores != nullptr) p.silhouettes.push_back(sum / static_cast<double>(idx.size()));
  }
  if (element_scores != nullptr) {
    double total = 0;
    for (double s : *element_scores) total += s;
    p.average = total / static_cast<double>(element_scores->size());
  }
  return p;
}

}  // namespace

ClusterPartition ClusterRelations(const std::vector<std::string> &labels,
                                  const EmbeddingTable &embeddings, double target,
                                  std::vector<std::string> *log) {
  std::set<std::string> sorted(labels.begin(), labels.end());
  std::vector<std::string> usable;
  std::vector<Vector> vectors;
  for (const std::string &label : sorted) {
    auto v = embeddings.Find(Underscored(label));
    if (!v || std::all_of(v->begin(), v->end(), [](double x) { return x == 0; })) {
      if (log != nullptr) log->push_back("relation '" + label + "' has no embedding; not clustered");
      continue;
    }
    usable.push_back(label);
    vectors.emplace_back(v->begin(), v->end());
  }
  std::vector<int> single(usable.size(), 0);
  if (usable.size() < 2) {
    if (log != nullptr) log->push_back("fewer than 2 embeddable relations; single cluster");
    if (usable.empty()) return {};
    return MakePartition(usable, single, nullptr);
  }

  DistanceMatrix distances = CosineDistances(vectors);
  std::vector<std::vector<int>> path = AgglomerativePartitions(distances);
  // path[k] has n - k clusters; the last entry is the single cluster.
  double best_avg = -1;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    std::vector<double> scores = ElementSilhouettes(path[k], distances);
    double avg = 0;
    for (double s : scores) avg += s;
    avg /= static_cast<double>(scores.size());
    if (avg >= target) {
      ClusterPartition p = MakePartition(usable, path[k], &scores);
      p.reached_target = true;
      return p;
    }
    best_avg = std::max(best_avg, avg);
  }
  if (log != nullptr) {
    log->push_back("no partition reached silhouette " + std::to_string(target) + " (best " +
                   std::to_string(best_avg) + "); single cluster");
  }
  return MakePartition(usable, path.back(), nullptr);
}

}  // namespace scikg
