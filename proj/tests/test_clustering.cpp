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

#include "doctest.h"

#include "gbm/clustering.hpp"
#include "gbm/error.hpp"
#include "gbm/generators.hpp"
#include "gbm/metrics.hpp"
#include "helpers.hpp"

using namespace gbm;

namespace {

// Levels whose verdict does not depend on the count (counts / n lie in [0, 1]).
ThresholdPair fixed_rule(MotifKind k, bool same) {
  ThresholdPair t;
  t.motif = k;
  t.e_s = same ? -1.0 : 3.0;
  t.e_d = same ? -3.0 : 1.0;
  return t;
}

ClusterConfig rules(std::initializer_list<ThresholdPair> r) {
  ClusterConfig c;
  c.rules = r;
  return c;
}

std::vector<std::uint8_t> labels_of(const Partition& p) { return {p.labels().begin(), p.labels().end()}; }

}  // namespace

TEST_CASE("midpoint verdicts in both orientations") {
  ThresholdPair high{MotifKind::CommonNeighbor, 0.3, 0.1, true, true};
  CHECK(motif_verdict(3, 10, high));
  CHECK(motif_verdict(2, 10, high));
  CHECK_FALSE(motif_verdict(1, 10, high));
  ThresholdPair low{MotifKind::NbrOfUOnly, 0.1, 0.3, true, true};
  CHECK(motif_verdict(1, 10, low));
  CHECK(motif_verdict(2, 10, low));
  CHECK_FALSE(motif_verdict(3, 10, low));
}

TEST_CASE("bridge between cliques is judged different") {
  const Graph g = test::two_cliques();
  const ClusterConfig config = ClusterConfig::for_model({MotifKind::CommonNeighbor}, 5, 0, 10);
  CHECK_FALSE(process(g, 4, 5, config));
  CHECK(process(g, 0, 1, config));
  const ClusterResult r = cluster(g, config);
  CHECK(labels_of(r.partition) == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  CHECK(r.process_calls == 9);
  CHECK(r.components == 1);
}

TEST_CASE("process rejects non-edges and empty configs") {
  const Graph g = test::two_cliques();
  const ClusterConfig config = ClusterConfig::for_model({MotifKind::CommonNeighbor}, 5, 0, 10);
  CHECK_THROWS_AS(process(g, 0, 9, config), ParameterError);
  CHECK_THROWS_AS(process(g, 0, 1, ClusterConfig{}), ParameterError);
  CHECK_THROWS_AS(cluster(g, ClusterConfig{}), ParameterError);
  CHECK_THROWS_AS(ClusterConfig::for_model({}, 5, 0, 10), ParameterError);
}

TEST_CASE("majority vote and tie breaking") {
  const Graph g = test::two_cliques();
  using K = MotifKind;
  CHECK(process(g, 0, 1, rules({fixed_rule(K::CommonNeighbor, true), fixed_rule(K::NbrOfUOnly, false),
                                fixed_rule(K::NeitherNeighbor, true)})));
  CHECK_FALSE(process(g, 0, 1, rules({fixed_rule(K::CommonNeighbor, true), fixed_rule(K::NbrOfUOnly, false),
                                      fixed_rule(K::NeitherNeighbor, false)})));
  // ties: motif 1 decides when present
  CHECK_FALSE(process(g, 0, 1, rules({fixed_rule(K::NbrOfUOnly, true), fixed_rule(K::CommonNeighbor, false)})));
  CHECK(process(g, 0, 1, rules({fixed_rule(K::NbrOfUOnly, false), fixed_rule(K::CommonNeighbor, true)})));
  // otherwise "same"
  CHECK(process(g, 0, 1, rules({fixed_rule(K::NbrOfUOnly, false), fixed_rule(K::NeitherNeighbor, true)})));
}

TEST_CASE("disconnected graphs") {
  const std::vector<Edge> edges = {{0, 1}, {2, 3}, {3, 4}};
  const Graph g = Graph::from_edges(6, edges);
  ClusterConfig config = rules({fixed_rule(MotifKind::CommonNeighbor, false)});
  const ClusterResult r = cluster(g, config);
  CHECK(r.components == 3);
  CHECK(r.process_calls == 3);
  CHECK(labels_of(r.partition) == std::vector<std::uint8_t>{0, 1, 0, 1, 0, 0});
  config.disconnected = DisconnectedPolicy::Error;
  CHECK_THROWS_AS(cluster(g, config), DataError);
  CHECK_THROWS_AS(cluster(Graph::from_edges(0, {}), config), DataError);
}

TEST_CASE("recovery well above the threshold") {
  const GbmSample s = generate_gbm(GbmParams::scaled(4000, 30, 2, 7));
  const ClusterResult r = cluster(s.graph, ClusterConfig::for_model({MotifKind::CommonNeighbor}, 30, 2, 4000));
  CHECK(exact_recovery(r.partition, s.truth));
  CHECK(r.process_calls == 4000 - r.components);
}

TEST_CASE("threaded clustering matches the sequential result") {
  const GbmSample s = generate_gbm(GbmParams::scaled(3000, 20, 3, 5));
  ClusterConfig config =
      ClusterConfig::for_model({MotifKind::CommonNeighbor, MotifKind::NbrOfUOnly, MotifKind::NeitherNeighbor}, 20, 3,
                               3000, LevelSource::Expected);
  const ClusterResult one = cluster(s.graph, config);
  config.threads = 4;
  const ClusterResult four = cluster(s.graph, config);
  CHECK(one.partition == four.partition);
  CHECK(one.process_calls == four.process_calls);
}

TEST_CASE("three-threshold heuristic on cliques") {
  std::vector<Edge> edges = test::two_cliques().edges();
  edges.push_back({10, 0});
  edges.push_back({10, 1});
  edges.push_back({11, 10});
  const Graph g = Graph::from_edges(12, edges);
  const RealClusterResult r = cluster_real(g, 3, 3, 1);
  CHECK(r.core_size == 10);
  CHECK(r.voted == 1);
  CHECK(r.unassignable == 1);
  CHECK(labels_of(r.partition) == std::vector<std::uint8_t>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0});
  CHECK_THROWS_AS(cluster_real(g, 2, 3, 1), ParameterError);
  CHECK_THROWS_AS(cluster_real(g, 50, 2, 1), DataError);
}
