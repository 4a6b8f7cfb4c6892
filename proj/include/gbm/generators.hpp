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

#include "gbm/graph.hpp"

namespace gbm {

/// Two-cluster geometric block model on the unit circle. Vertices u, v are
/// adjacent iff their circle distance is at most r_s (same cluster) or r_d
/// (different clusters).
struct GbmParams {
  std::size_t n = 0;
  double r_s = 0.0;
  double r_d = 0.0;
  std::uint64_t seed = 0;

  static GbmParams raw(std::size_t n, double r_s, double r_d, std::uint64_t seed);
  /// r_s = a ln(n)/n and r_d = b ln(n)/n (natural log).
  static GbmParams scaled(std::size_t n, double a, double b, std::uint64_t seed);

  /// Throws ParameterError unless n is even and >= 4 and 0 <= r_d <= r_s <= 1/2.
  void validate() const;
};

/// Geometric block model on the sphere S^{dim-1}: adjacent iff the inner
/// product of the latent unit vectors is at least beta_s (same cluster) or
/// beta_d (different clusters). beta_s <= beta_d keeps intra-cluster edges
/// denser, matching r_s >= r_d on the circle.
struct SphereGbmParams {
  std::size_t n = 0;
  std::size_t dim = 2;
  double beta_s = 0.0;
  double beta_d = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Two-cluster stochastic block model with intra probability p and inter q.
struct SbmParams {
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;

  /// p = a ln(n)/n, q = b ln(n)/n.
  static SbmParams scaled(std::size_t n, double a, double b, std::uint64_t seed);
  void validate() const;
};

struct GbmSample {
  Graph graph;
  Partition truth;
  LatentPositions positions;
};

struct SbmSample {
  Graph graph;
  Partition truth;
};

GbmSample generate_gbm(const GbmParams& params);
GbmSample generate_gbm_sphere(const SphereGbmParams& params);
SbmSample generate_sbm(const SbmParams& params);

/// Edge set of the circle model for given positions and labels. Pairs are
/// found by a sweep over the sorted positions, so the cost is
/// O(n log n + pairs within max(r_s, r_d)).
Graph build_circle_graph(std::span<const double> positions, const Partition& labels, double r_s,
                         double r_d);

}  // namespace gbm
