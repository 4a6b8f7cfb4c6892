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

#include "gbm/motifs.hpp"

#include <algorithm>
#include <string>

#include "gbm/error.hpp"
#include "gbm/simd/kernels.hpp"

namespace gbm {
namespace {

void check_pair(const Graph& graph, Vertex u, Vertex v) {
  if (u == v) throw ParameterError("motif counts need two distinct vertices");
  if (u >= graph.num_vertices() || v >= graph.num_vertices()) {
    throw ParameterError("vertex out of range: " + std::to_string(std::max(u, v)));
  }
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

std::string_view motif_name(MotifKind k) noexcept {
  switch (k) {
    case MotifKind::CommonNeighbor:
      return "common-neighbor";
    case MotifKind::NbrOfUOnly:
      return "u-only";
    case MotifKind::NbrOfVOnly:
      return "v-only";
    case MotifKind::NeitherNeighbor:
      return "neither";
  }
  return "unknown";
}

MotifKind parse_motif(std::string_view text) {
  for (MotifKind k : kAllMotifs) {
    if (text == motif_name(k) || text == std::to_string(motif_number(k))) return k;
  }
  throw ParameterError("unknown motif '" + std::string(text) + "' (expected 1-4)");
}

MotifCounts count_motifs(const Graph& graph, Vertex u, Vertex v) {
  check_pair(graph, u, v);
  const std::uint64_t common = simd::intersect_count(graph.neighbors(u), graph.neighbors(v));
  const std::uint64_t joined = graph.has_edge(u, v) ? 1 : 0;
  MotifCounts c;
  c[MotifKind::CommonNeighbor] = common;
  c[MotifKind::NbrOfUOnly] = graph.degree(u) - common - joined;
  c[MotifKind::NbrOfVOnly] = graph.degree(v) - common - joined;
  c[MotifKind::NeitherNeighbor] = graph.num_vertices() - 2 - c[MotifKind::CommonNeighbor] -
                                  c[MotifKind::NbrOfUOnly] - c[MotifKind::NbrOfVOnly];
  return c;
}

std::uint64_t count_motif(const Graph& graph, Vertex u, Vertex v, MotifKind kind) {
  return count_motifs(graph, u, v)[kind];
}

MotifCounts brute_force_motif_counts(const Graph& graph, Vertex u, Vertex v) {
  check_pair(graph, u, v);
  MotifCounts c;
  const auto n = static_cast<Vertex>(graph.num_vertices());
  for (Vertex z = 0; z < n; ++z) {
    if (z == u || z == v) continue;
    const bool to_u = graph.has_edge(z, u);
    const bool to_v = graph.has_edge(z, v);
    if (to_u && to_v) {
      ++c[MotifKind::CommonNeighbor];
    } else if (to_u) {
      ++c[MotifKind::NbrOfUOnly];
    } else if (to_v) {
      ++c[MotifKind::NbrOfVOnly];
    } else {
      ++c[MotifKind::NeitherNeighbor];
    }
  }
  return c;
}

double MotifDistribution::mean() const noexcept {
  double m = 0.0;
  for (const auto& t : terms_) m += static_cast<double>(t.trials) * t.prob;
  return m;
}

double MotifDistribution::variance() const noexcept {
  double var = 0.0;
  for (const auto& t : terms_) var += static_cast<double>(t.trials) * t.prob * (1.0 - t.prob);
  return var;
}

MotifDistribution theoretical_distribution(MotifKind kind, bool same_cluster, std::size_t n,
                                           double r_s, double r_d, double x) {
  if (n < 4 || n % 2 != 0) throw ParameterError("n must be even and at least 4");
  if (!(r_d >= 0.0 && r_d <= r_s && r_s <= 0.5)) throw ParameterError("radii must satisfy 0 <= r_d <= r_s <= 1/2");
  const double x_max = same_cluster ? r_s : r_d;
  if (!(x >= 0.0 && x <= x_max * (1.0 + 1e-12))) {
    throw ParameterError("distance " + std::to_string(x) + " outside [0, " + std::to_string(x_max) +
                         "] for a " + (same_cluster ? "same" : "different") + "-cluster edge");
  }
  x = std::min(x, x_max);

  const std::uint64_t half = n / 2;
  const std::uint64_t all = n - 2;
  const bool sparse = r_s > 2.0 * r_d;
  std::vector<BinomialTerm> t;
  auto add = [&](std::uint64_t trials, double p) { t.push_back({trials, clamp01(p)}); };

  switch (kind) {
    case MotifKind::CommonNeighbor:
      if (same_cluster) {
        add(half - 2, 2 * r_s - x);
        if (!sparse || x <= 2 * r_d) add(half, 2 * r_d - x);
      } else if (sparse) {
        add(all, 2 * r_d);
      } else {
        add(all, std::min(r_s + r_d - x, 2 * r_d));
      }
      break;
    case MotifKind::NbrOfUOnly:
    case MotifKind::NbrOfVOnly:
      // Motif 3 mirrors motif 2 under u <-> v.
      if (same_cluster) {
        if (sparse) {
          add(half - 2, x);
          add(half, std::min(x, 2 * r_d));
        } else {
          add(all, x);
        }
      } else if (sparse) {
        add(half - 1, 2 * (r_s - r_d));
      } else {
        add(half - 1, r_s - r_d + x + std::max(r_s - x - r_d, 0.0));
        add(half - 1, std::max(x + r_d - r_s, 0.0));
      }
      break;
    case MotifKind::NeitherNeighbor:
      if (same_cluster) {
        add(half - 2, 1 - (x + 2 * r_s));
        if (!sparse || x <= 2 * r_d) {
          add(half, 1 - (x + 2 * r_d));
        } else {
          add(half, 1 - 4 * r_d);
        }
      } else if (sparse) {
        add(all, 1 - 2 * r_s);
      } else if (x <= r_s - r_d) {
        add(all, 1 - 2 * r_s);
      } else {
        add(all, 1 - (x + r_s + r_d));
      }
      break;
  }
  return MotifDistribution(std::move(t));
}

double expected_count(MotifKind kind, bool same_cluster, std::size_t n, double r_s, double r_d,
                      double x) {
  return theoretical_distribution(kind, same_cluster, n, r_s, r_d, x).mean();
}

}  // namespace gbm
