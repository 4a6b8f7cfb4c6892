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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "gbm/graph.hpp"

namespace gbm {

/// Position of a third vertex z relative to a pair (u, v).
enum class MotifKind : std::uint8_t {
  CommonNeighbor = 0,  // motif 1: z ~ u and z ~ v  (triangle)
  NbrOfUOnly = 1,      // motif 2: z ~ u only
  NbrOfVOnly = 2,      // motif 3: z ~ v only
  NeitherNeighbor = 3  // motif 4: z adjacent to neither
};

inline constexpr std::array<MotifKind, 4> kAllMotifs = {
    MotifKind::CommonNeighbor, MotifKind::NbrOfUOnly, MotifKind::NbrOfVOnly,
    MotifKind::NeitherNeighbor};

constexpr int motif_number(MotifKind k) noexcept { return static_cast<int>(k) + 1; }
std::string_view motif_name(MotifKind k) noexcept;
/// Accepts "1".."4" or the names returned by motif_name. Throws ParameterError.
MotifKind parse_motif(std::string_view text);

struct MotifCounts {
  std::array<std::uint64_t, 4> values{};

  std::uint64_t operator[](MotifKind k) const noexcept { return values[static_cast<std::size_t>(k)]; }
  std::uint64_t& operator[](MotifKind k) noexcept { return values[static_cast<std::size_t>(k)]; }
  friend bool operator==(const MotifCounts&, const MotifCounts&) = default;
};

/// All four counts over z in V \ {u, v}, from one neighborhood intersection.
/// Throws ParameterError when u == v or a vertex is out of range.
MotifCounts count_motifs(const Graph& graph, Vertex u, Vertex v);
std::uint64_t count_motif(const Graph& graph, Vertex u, Vertex v, MotifKind kind);

/// Reference counts: tests both adjacency predicates for every z explicitly.
MotifCounts brute_force_motif_counts(const Graph& graph, Vertex u, Vertex v);

struct BinomialTerm {
  std::uint64_t trials = 0;
  double prob = 0.0;
};

/// Sum of independent binomials. Indicator-gated cells are resolved when
/// the distribution is built, so only active terms are stored.
class MotifDistribution {
 public:
  MotifDistribution() = default;
  explicit MotifDistribution(std::vector<BinomialTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<BinomialTerm>& terms() const noexcept { return terms_; }
  double mean() const noexcept;
  double variance() const noexcept;

 private:
  std::vector<BinomialTerm> terms_;
};

/// Count distribution of `kind` for an edge (u, v) at circle distance x in
/// the two-cluster circle model with equal clusters of n/2. The regime is
/// r_s > 2 r_d or r_s <= 2 r_d. Same-cluster pairs need 0 <= x <= r_s,
/// different-cluster pairs 0 <= x <= r_d; otherwise ParameterError.
/// Probabilities are clamped to [0, 1].
MotifDistribution theoretical_distribution(MotifKind kind, bool same_cluster, std::size_t n,
                                           double r_s, double r_d, double x);

double expected_count(MotifKind kind, bool same_cluster, std::size_t n, double r_s, double r_d,
                      double x);

}  // namespace gbm
