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

#include "gbm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "gbm/error.hpp"
#include "gbm/random.hpp"
#include "gbm/simd/kernels.hpp"

namespace gbm {
namespace {

void validate_vertex_count(std::size_t n) {
  if (n < 4) throw ParameterError("n must be at least 4, got " + std::to_string(n));
  if (n % 2 != 0) throw ParameterError("n must be even (two equal clusters), got " + std::to_string(n));
  if (n > std::size_t{UINT32_MAX}) throw ParameterError("n exceeds 32-bit vertex ids");
}

double scale_for(std::size_t n) { return std::log(static_cast<double>(n)) / static_cast<double>(n); }

}  // namespace

GbmParams GbmParams::raw(std::size_t n, double r_s, double r_d, std::uint64_t seed) {
  GbmParams p{n, r_s, r_d, seed};
  p.validate();
  return p;
}

GbmParams GbmParams::scaled(std::size_t n, double a, double b, std::uint64_t seed) {
  validate_vertex_count(n);
  return raw(n, a * scale_for(n), b * scale_for(n), seed);
}

void GbmParams::validate() const {
  validate_vertex_count(n);
  if (!(r_d >= 0.0)) throw ParameterError("r_d must be non-negative");
  if (!(r_d <= r_s)) throw ParameterError("r_d must not exceed r_s");
  if (!(r_s <= 0.5)) throw ParameterError("r_s must not exceed 1/2, got " + std::to_string(r_s));
}

void SphereGbmParams::validate() const {
  validate_vertex_count(n);
  if (dim < 2) throw ParameterError("sphere dimension must be at least 2");
  auto in_range = [](double beta) { return beta >= -1.0 && beta <= 1.0; };
  if (!in_range(beta_s) || !in_range(beta_d)) throw ParameterError("beta values must lie in [-1, 1]");
  if (!(beta_s <= beta_d)) throw ParameterError("beta_s must not exceed beta_d");
}

SbmParams SbmParams::scaled(std::size_t n, double a, double b, std::uint64_t seed) {
  validate_vertex_count(n);
  SbmParams p{n, a * scale_for(n), b * scale_for(n), seed};
  p.validate();
  return p;
}

void SbmParams::validate() const {
  validate_vertex_count(n);
  if (!(q >= 0.0 && q <= p && p <= 1.0)) throw ParameterError("SBM requires 0 <= q <= p <= 1");
}

Graph build_circle_graph(std::span<const double> positions, const Partition& labels, double r_s,
                         double r_d) {
  const std::size_t n = positions.size();
  if (labels.size() != n) throw ParameterError("positions and labels differ in length");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return positions[x] < positions[y]; });

  // Scan forward (with wrap-around) from every vertex while the forward gap
  // stays within the larger radius. The slack only admits candidates; the
  // exact distance test decides adjacency.
  const double window = std::max(r_s, r_d) + 1e-12;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex u = order[i];
    const double xu = positions[u];
    for (std::size_t step = 1; step < n; ++step) {
      const Vertex v = order[(i + step) % n];
      double gap = positions[v] - xu;
      if (gap < 0.0) gap += 1.0;
      if (gap > window) break;
      const double radius = labels[u] == labels[v] ? r_s : r_d;
      if (circle_distance(xu, positions[v]) <= radius) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

GbmSample generate_gbm(const GbmParams& params) {
  params.validate();
  Rng rng(params.seed);
  std::vector<double> x(params.n);
  for (double& xi : x) xi = rng.uniform();
  Partition truth = Partition::halves(params.n);
  Graph graph = build_circle_graph(x, truth, params.r_s, params.r_d);
  return {std::move(graph), std::move(truth), LatentPositions::circle(std::move(x))};
}

GbmSample generate_gbm_sphere(const SphereGbmParams& params) {
  params.validate();
  const std::size_t n = params.n;
  const std::size_t dim = params.dim;
  Rng rng(params.seed);
  std::vector<double> rows(n * dim);
  for (std::size_t v = 0; v < n; ++v) {
    double* z = rows.data() + v * dim;
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        z[k] = rng.normal();
        norm2 += z[k] * z[k];
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t k = 0; k < dim; ++k) z[k] *= inv;
  }

  std::vector<double> columns(n * dim);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < dim; ++k) columns[k * n + v] = rows[v * dim + k];
  }

  Partition truth = Partition::halves(n);
  std::vector<Edge> edges;
  std::vector<double> dots(n);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    simd::inner_products(columns.data(), n, dim, rows.data() + u * dim, u + 1, n, dots.data());
    for (std::size_t v = u + 1; v < n; ++v) {
      const double beta = truth[static_cast<Vertex>(u)] == truth[static_cast<Vertex>(v)] ? params.beta_s
                                                                                           : params.beta_d;
      if (dots[v - u - 1] >= beta) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  Graph graph = Graph::from_edges(n, edges);
  return {std::move(graph), std::move(truth), LatentPositions::sphere(dim, std::move(rows))};
}

SbmSample generate_sbm(const SbmParams& params) {
  params.validate();
  const std::size_t n = params.n;
  Rng rng(params.seed);
  Partition truth = Partition::halves(n);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = truth[static_cast<Vertex>(u)] == truth[static_cast<Vertex>(v)] ? params.p : params.q;
      if (rng.bernoulli(p)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return {Graph::from_edges(n, edges), std::move(truth)};
}

}  // namespace gbm
