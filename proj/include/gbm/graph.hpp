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
#include <span>
#include <vector>

namespace gbm {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph in compressed sparse row form.
///
/// Every neighbor list is sorted ascending and duplicate free, so set
/// operations on neighborhoods are linear merges. The structure is immutable
/// once built and may be shared between threads for reading.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate and reversed edges collapse;
  /// a self-loop or an endpoint >= n throws DataError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const noexcept {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  /// Binary search in the neighbor list of the lower-degree endpoint.
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Each edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  template <typename F>
  void for_each_edge(F&& f) const {
    const auto n = static_cast<Vertex>(num_vertices());
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) f(u, v);
      }
    }
  }

  /// Connected component id per vertex (ids in order of lowest member).
  std::vector<std::uint32_t> component_ids(std::size_t* count = nullptr) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// Two-way cluster assignment.
class Partition {
 public:
  Partition() = default;
  /// Throws DataError when a label is not 0 or 1.
  explicit Partition(std::vector<std::uint8_t> labels);

  /// Ground truth used by the generators: first n/2 vertices in cluster 0.
  static Partition halves(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::uint8_t operator[](Vertex v) const noexcept { return labels_[v]; }
  std::span<const std::uint8_t> labels() const noexcept { return labels_; }

  Partition swapped() const;
  std::size_t count(std::uint8_t label) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint8_t> labels_;
};

/// Latent vertex positions: a point on the unit circle [0,1) per vertex, or a
/// unit vector in R^dim per vertex (row-major).
class LatentPositions {
 public:
  LatentPositions() = default;

  static LatentPositions circle(std::vector<double> values);
  static LatentPositions sphere(std::size_t dim, std::vector<double> row_major);

  bool is_circle() const noexcept { return circle_; }
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : values_.size() / dim_; }

  double circle_position(Vertex v) const noexcept { return values_[v]; }
  std::span<const double> sphere_position(Vertex v) const noexcept {
    return {values_.data() + std::size_t{v} * dim_, dim_};
  }
  std::span<const double> values() const noexcept { return values_; }

 private:
  bool circle_ = true;
  std::size_t dim_ = 1;
  std::vector<double> values_;
};

/// Wrap-around distance on the unit circle, min(|x-y|, 1-|x-y|).
inline double circle_distance(double x, double y) noexcept {
  const double d = x > y ? x - y : y - x;
  const double w = 1.0 - d;
  return d < w ? d : w;
}

}  // namespace gbm
