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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

struct EdgeListOptions {
  /// Map arbitrary (sparse) external ids onto 0..k-1 in ascending id order.
  /// A "n <count>" header, if present, is ignored in this mode.
  bool remap_ids = false;
};

struct LoadedGraph {
  Graph graph;
  /// original_ids[v] is the external id of dense vertex v; empty unless remapped.
  std::vector<std::uint64_t> original_ids;
};

// Edge-list text format: one "u v" pair per line, whitespace separated.
// Lines whose first non-blank character is '#' are comments. The first
// non-comment line may be "n <count>" to fix the vertex count (isolated
// trailing vertices); otherwise n = 1 + max id.
LoadedGraph read_edge_list(std::istream& in, const EdgeListOptions& options = {});
Graph load_edge_list(const std::filesystem::path& path);
LoadedGraph load_edge_list(const std::filesystem::path& path, const EdgeListOptions& options);

void write_edge_list(std::ostream& out, const Graph& graph);
void save_edge_list(const Graph& graph, const std::filesystem::path& path);

// Label files: one "vertex label" pair per line, '#' comments allowed.
// When `expected_n` is empty the vertex count is 1 + max vertex id; every
// vertex below it must appear exactly once.
Partition read_labels(std::istream& in, std::optional<std::size_t> expected_n = std::nullopt);
Partition load_labels(const std::filesystem::path& path,
                      std::optional<std::size_t> expected_n = std::nullopt);

/// Writes labels; vertex v is printed as ids[v] when `ids` is non-empty.
void write_labels(std::ostream& out, const Partition& partition,
                  const std::vector<std::uint64_t>& ids = {});
void save_partition(const Partition& partition, const std::filesystem::path& path,
                    const std::vector<std::uint64_t>& ids = {});

/// "vertex position" lines (circle) or "vertex c_1 ... c_t" lines (sphere).
void write_positions(std::ostream& out, const LatentPositions& positions);

}  // namespace gbm
