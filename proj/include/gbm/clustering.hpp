// Copyright 2026 The GBM Motif Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gbm/graph.hpp"
#include "gbm/motifs.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {

enum class DisconnectedPolicy { Error, PerComponent };

/// Where the decision levels come from.
enum class LevelSource { ClosedForm, Expected };

struct ClusterConfig {
  /// One level pair per motif that takes part in the vote.
  std::vector<ThresholdPair> rules;
  DisconnectedPolicy disconnected = DisconnectedPolicy::PerComponent;
  /// Worker threads for the motif counts along the traversal tree.
  unsigned threads = 1;

  /// Levels for every motif in `motifs`, evaluated at (a, b, n).
  static ClusterConfig for_model(const std::vector<MotifKind>& motifs, double a, double b,
                                 std::size_t n, LevelSource source = LevelSource::ClosedForm);
};

/// Verdict of a single motif: "same" iff count/n is at least as close to
/// e_s as to e_d. An exact midpoint counts as "same".
bool motif_verdict(std::uint64_t count, std::size_t n, const ThresholdPair& levels);

/// Majority vote over the configured motifs for the edge (u, v). A tied vote
/// takes the common-neighbor verdict when that motif is configured, and
/// "same" otherwise. Throws ParameterError if (u, v) is not an edge or the
/// config has no rules.
bool process(const Graph& graph, Vertex u, Vertex v, const ClusterConfig& config);

struct ClusterResult {
  Partition partition;
  std::size_t process_calls = 0;
  std::size_t components = 0;
};

/// Edge-driven label propagation. Starting at the lowest unassigned vertex,
/// vertices are discovered breadth first in ascending neighbor order, and
/// each newly discovered v is labelled by process() against the vertex u that
/// discovered it. On a connected graph this makes exactly n - 1 calls.
/// Components after the first restart at label 0 (PerComponent) or raise
/// DataError (Error).
ClusterResult cluster(const Graph& graph, const ClusterConfig& config);

struct RealClusterResult {
  Partition partition;
  std::size_t core_size = 0;     // |S|
  std::size_t voted = 0;         // vertices outside S assigned by vote
  std::size_t unassignable = 0;  // outside S with no qualifying neighbor
};

/// Three-threshold heuristic for graphs with unknown radii:
///  1. S = endpoints of edges with at least t1 common neighbors.
///  2. Inside S (induced edges), label propagation as in cluster(), where
///     an edge is "same" iff it has at least t2 common neighbors.
///  3. Every x outside S takes the majority label among its neighbors u in S
///     with at least t3 common neighbors with x. Vertices without such a
///     neighbor, and tied votes, get the label of the larger cluster in S.
/// Throws ParameterError on t1 < t2 and DataError if S is empty.
RealClusterResult cluster_real(const Graph& graph, std::uint64_t t1, std::uint64_t t2,
                               std::uint64_t t3);

}  // namespace gbm
