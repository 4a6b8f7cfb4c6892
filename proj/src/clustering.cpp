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

#include "gbm/clustering.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "gbm/error.hpp"
#include "gbm/simd/kernels.hpp"

namespace gbm {
namespace {

constexpr Vertex kNoParent = UINT32_MAX;

bool vote(const Graph& graph, Vertex u, Vertex v, const ClusterConfig& config) {
  const MotifCounts counts = count_motifs(graph, u, v);
  const std::size_t n = graph.num_vertices();
  std::size_t same = 0;
  std::size_t different = 0;
  bool common_verdict = true;
  bool has_common = false;
  for (const ThresholdPair& rule : config.rules) {
    const bool verdict = motif_verdict(counts[rule.motif], n, rule);
    (verdict ? same : different) += 1;
    if (rule.motif == MotifKind::CommonNeighbor && !has_common) {
      has_common = true;
      common_verdict = verdict;
    }
  }
  if (same != different) return same > different;
  return has_common ? common_verdict : true;
}

// Breadth-first discovery from the lowest unvisited vertex, neighbors in
// ascending order. Restricted to vertices with allowed[v] when given.
struct Traversal {
  std::vector<Vertex> order;    // discovery order
  std::vector<Vertex> parent;   // kNoParent for roots
  std::size_t components = 0;
};

Traversal traverse(const Graph& graph, const std::vector<std::uint8_t>* allowed) {
  const std::size_t n = graph.num_vertices();
  Traversal t;
  t.parent.assign(n, kNoParent);
  std::vector<std::uint8_t> seen(n, 0);
  t.order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root] || (allowed && !(*allowed)[root])) continue;
    ++t.components;
    seen[root] = 1;
    std::size_t head = t.order.size();
    t.order.push_back(root);
    while (head < t.order.size()) {
      const Vertex u = t.order[head++];
      for (Vertex v : graph.neighbors(u)) {
        if (seen[v] || (allowed && !(*allowed)[v])) continue;
        seen[v] = 1;
        t.parent[v] = u;
        t.order.push_back(v);
      }
    }
  }
  return t;
}

// Applies `decide(parent, child)` to every tree edge, splitting the work
// across `threads` workers. Results are indexed by child vertex.
template <typename Decide>
std::vector<std::uint8_t> tree_verdicts(const Traversal& t, unsigned threads, Decide decide) {
  std::vector<std::uint8_t> same(t.parent.size(), 0);
  std::vector<Vertex> children;
  children.reserve(t.order.size());
  for (Vertex v : t.order) {
    if (t.parent[v] != kNoParent) children.push_back(v);
  }
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Vertex v = children[i];
      same[v] = decide(t.parent[v], v) ? 1 : 0;
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, children.size() / 256));
  if (workers <= 1) {
    work(0, children.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (children.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(children.size(), w * chunk);
      const std::size_t end = std::min(children.size(), begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }
  return same;
}

void propagate(const Traversal& t, const std::vector<std::uint8_t>& same, std::vector<std::uint8_t>& labels) {
  for (Vertex v : t.order) {
    const Vertex p = t.parent[v];
    labels[v] = p == kNoParent ? 0 : static_cast<std::uint8_t>(same[v] ? labels[p] : 1 - labels[p]);
  }
}

}  // namespace

ClusterConfig ClusterConfig::for_model(const std::vector<MotifKind>& motifs, double a, double b,
                                       std::size_t n, LevelSource source) {
  if (motifs.empty()) throw ParameterError("at least one motif is required");
  ClusterConfig config;
  for (MotifKind k : motifs) {
    config.rules.push_back(source == LevelSource::ClosedForm ? closed_form_thresholds(k, a, b, n)
                                                          : expected_levels(k, a, b, n));
  }
  return config;
}

bool motif_verdict(std::uint64_t count, std::size_t n, const ThresholdPair& levels) {
  // |c - e_s| <= |c - e_d| written against the midpoint so that an exact
  // midpoint is not decided by rounding.
  const double c = static_cast<double>(count) / static_cast<double>(n);
  const double mid = 0.5 * (levels.e_s + levels.e_d);
  return levels.e_s >= levels.e_d ? c >= mid : c <= mid;
}

bool process(const Graph& graph, Vertex u, Vertex v, const ClusterConfig& config) {
  if (config.rules.empty()) throw ParameterError("cluster config has no motif rules");
  if (!graph.has_edge(u, v)) {
    throw ParameterError("process() needs an edge; (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") is not one");
  }
  return vote(graph, u, v, config);
}

ClusterResult cluster(const Graph& graph, const ClusterConfig& config) {
  if (config.rules.empty()) throw ParameterError("cluster config has no motif rules");
  const std::size_t n = graph.num_vertices();
  if (n == 0) throw DataError("cannot cluster an empty graph");

  const Traversal t = traverse(graph, nullptr);
  if (t.components > 1 && config.disconnected == DisconnectedPolicy::Error) {
    throw DataError("graph has " + std::to_string(t.components) + " connected components");
  }
  const auto same = tree_verdicts(t, config.threads,
                                  [&](Vertex u, Vertex v) { return vote(graph, u, v, config); });
  std::vector<std::uint8_t> labels(n, 0);
  propagate(t, same, labels);

  ClusterResult result;
  result.partition = Partition(std::move(labels));
  result.process_calls = n - t.components;
  result.components = t.components;
  return result;
}

RealClusterResult cluster_real(const Graph& graph, std::uint64_t t1, std::uint64_t t2, std::uint64_t t3) {
  if (t1 < t2) throw ParameterError("cluster_real requires t1 >= t2");
  const std::size_t n = graph.num_vertices();
  auto common = [&](Vertex u, Vertex v) {
    return static_cast<std::uint64_t>(simd::intersect_count(graph.neighbors(u), graph.neighbors(v)));
  };

  std::vector<std::uint8_t> in_core(n, 0);
  graph.for_each_edge([&](Vertex u, Vertex v) {
    if ((in_core[u] && in_core[v]) || common(u, v) < t1) return;
    in_core[u] = in_core[v] = 1;
  });
  RealClusterResult result;
  result.core_size = static_cast<std::size_t>(std::count(in_core.begin(), in_core.end(), 1));
  if (result.core_size == 0) {
    throw DataError("no edge has " + std::to_string(t1) + " common neighbors; core subgraph is empty");
  }

  const Traversal t = traverse(graph, &in_core);
  const auto same = tree_verdicts(t, 1, [&](Vertex u, Vertex v) { return common(u, v) >= t2; });
  std::vector<std::uint8_t> labels(n, 0);
  propagate(t, same, labels);

  std::size_t core_ones = 0;
  for (Vertex v = 0; v < n; ++v) core_ones += in_core[v] && labels[v] == 1;
  const std::uint8_t larger = core_ones > result.core_size - core_ones ? 1 : 0;

  for (Vertex x = 0; x < n; ++x) {
    if (in_core[x]) continue;
    std::size_t votes[2] = {0, 0};
    for (Vertex u : graph.neighbors(x)) {
      if (in_core[u] && common(x, u) >= t3) ++votes[labels[u]];
    }
    if (votes[0] + votes[1] == 0) {
      ++result.unassignable;
      labels[x] = larger;
    } else {
      ++result.voted;
      labels[x] = votes[0] == votes[1] ? larger : static_cast<std::uint8_t>(votes[1] > votes[0]);
    }
  }
  result.partition = Partition(std::move(labels));
  return result;
}

}  // namespace gbm
