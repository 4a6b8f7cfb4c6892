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

#include "gbm/graph.hpp"

namespace gbm {

/// Pair-counting scores: a pair is "predicted same" when both vertices
/// share a predicted label. precision = correct same pairs / predicted same
/// pairs, recall = correct same pairs / truly same pairs. Computed from the
/// 2x2 confusion table. Zero denominators give 0.
struct PairScores {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  double node_error_rate = 0.0;
  bool exact = false;
};

// All functions throw DataError when the partitions differ in size.
PairScores pair_fscore(const Partition& pred, const Partition& truth);
/// Fraction of vertices whose true label differs from the majority true label
/// of their predicted cluster (majority ties resolve to label 0).
double node_error_rate(const Partition& pred, const Partition& truth);
/// Equal up to swapping the two labels.
bool exact_recovery(const Partition& pred, const Partition& truth);
EvalReport evaluate(const Partition& pred, const Partition& truth);

}  // namespace gbm
