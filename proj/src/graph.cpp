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

#include "gbm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gbm/error.hpp"

namespace gbm {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::size_t{UINT32_MAX}) throw DataError("vertex count exceeds 32-bit ids");
  std::vector<std::size_t> degree(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw DataError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") references a vertex >= " + std::to_string(n));
    }
    if (e.u == e.v) throw DataError("self-loop on vertex " + std::to_string(e.u));
    ++degree[e.u];
    ++degree[e.v];
  }

  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) offsets[u + 1] = offsets[u] + degree[u];
  std::vector<Vertex> targets(offsets[n]);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    targets[cursor[e.u]++] = e.v;
    targets[cursor[e.v]++] = e.u;
  }

  // Sort and deduplicate each row, compacting in place.
  std::size_t write = 0;
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    for (auto it = first; it != last; ++it) targets[write++] = *it;
    g.offsets_[u + 1] = write;
  }
  targets.resize(write);
  targets.shrink_to_fit();
  g.targets_ = std::move(targets);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for_each_edge([&](Vertex u, Vertex v) { out.push_back({u, v}); });
  return out;
}

std::vector<std::uint32_t> Graph::component_ids(std::size_t* count) const {
  const std::size_t n = num_vertices();
  constexpr auto kUnset = UINT32_MAX;
  std::vector<std::uint32_t> comp(n, kUnset);
  std::vector<Vertex> stack;
  std::uint32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(u)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

Partition::Partition(std::vector<std::uint8_t> labels) : labels_(std::move(labels)) {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] > 1) {
      throw DataError("vertex " + std::to_string(v) + " has label " +
                      std::to_string(labels_[v]) + ", expected 0 or 1");
    }
  }
}

Partition Partition::halves(std::size_t n) {
  std::vector<std::uint8_t> labels(n, 0);
  std::fill(labels.begin() + static_cast<std::ptrdiff_t>(n / 2), labels.end(), std::uint8_t{1});
  return Partition(std::move(labels));
}

Partition Partition::swapped() const {
  std::vector<std::uint8_t> out(labels_.size());
  std::transform(labels_.begin(), labels_.end(), out.begin(),
                 [](std::uint8_t l) { return static_cast<std::uint8_t>(1 - l); });
  return Partition(std::move(out));
}

std::size_t Partition::count(std::uint8_t label) const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

LatentPositions LatentPositions::circle(std::vector<double> values) {
  for (double x : values) {
    if (!(x >= 0.0 && x < 1.0)) throw DataError("circle position outside [0,1)");
  }
  LatentPositions p;
  p.circle_ = true;
  p.dim_ = 1;
  p.values_ = std::move(values);
  return p;
}

LatentPositions LatentPositions::sphere(std::size_t dim, std::vector<double> row_major) {
  if (dim < 2) throw DataError("sphere positions need dimension >= 2");
  if (row_major.size() % dim != 0) throw DataError("sphere coordinates not a multiple of dimension");
  for (std::size_t i = 0; i < row_major.size(); i += dim) {
    double norm2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) norm2 += row_major[i + k] * row_major[i + k];
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) throw DataError("sphere position is not a unit vector");
  }
  LatentPositions p;
  p.circle_ = false;
  p.dim_ = dim;
  p.values_ = std::move(row_major);
  return p;
}

}  // namespace gbm
