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

#ifndef SCIKG_CLUSTERING_H_
#define SCIKG_CLUSTERING_H_

#include <optional>
#include <string>
#include <vector>

#include "scikg/embeddings.h"

namespace scikg {

// Symmetric matrix of pairwise distances.
using DistanceMatrix = std::vector<std::vector<double>>;

// 1 - cosine between every pair of (non-zero) vectors.
DistanceMatrix CosineDistances(const std::vector<Vector> &vectors);

// Silhouette of each element given a cluster id per element. Members of a
// singleton cluster score 0. Requires at least two distinct clusters.
std::vector<double> ElementSilhouettes(const std::vector<int> &assignment,
                                       const DistanceMatrix &distances);

// Average-linkage agglomeration. Element i starts in cluster i; entry k of
// the result is the assignment after k merges, so the result has n entries
// from the all-singletons partition down to a single cluster. Cluster ids are
// the smallest element index of each cluster. Equal distances are resolved
// in favour of the pair with the smallest ids.
std::vector<std::vector<int>> AgglomerativePartitions(const DistanceMatrix &distances);

struct ClusterPartition {
  // Sorted members per cluster; clusters ordered by their first member.
  std::vector<std::vector<std::string>> clusters;
  // Mean element silhouette per cluster (empty when undefined).
  std::vector<double> silhouettes;
  // Average over all elements; unset for a single cluster.
  std::optional<double> average;
  bool reached_target = false;
};

// Clusters the labels that have an embedding. Picks the finest partition with
// at least two clusters whose average silhouette reaches `target`; when none
// does, all labels form one cluster. Labels without an embedding are left out.
ClusterPartition ClusterRelations(const std::vector<std::string> &labels,
                                  const EmbeddingTable &embeddings, double target,
                                  std::vector<std::string> *log = nullptr);

}  // namespace scikg

#endif  // SCIKG_CLUSTERING_H_
