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

#include <vector>

#include "gbm/graph.hpp"
#include "gbm/random.hpp"

namespace gbm::test {

// Erdos-Renyi style graph for structural tests.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

// Two disjoint K5 on 0..4 and 5..9 joined by the bridge (4, 5).
inline Graph two_cliques() {
  std::vector<Edge> edges;
  for (Vertex base : {0u, 5u}) {
    for (Vertex i = 0; i < 5; ++i) {
      for (Vertex j = i + 1; j < 5; ++j) edges.push_back({base + i, base + j});
    }
  }
  edges.push_back({4, 5});
  return Graph::from_edges(10, edges);
}

}  // namespace gbm::test
