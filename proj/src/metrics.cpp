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

#include "gbm/metrics.hpp"

#include <array>
#include <string>

#include "gbm/error.hpp"

namespace gbm {
namespace {

using Confusion = std::array<std::array<double, 2>, 2>;  // [pred][truth]

Confusion confusion(const Partition& pred, const Partition& truth) {
  if (pred.size() != truth.size()) {
    throw DataError("partition sizes differ: " + std::to_string(pred.size()) + " vs " +
                    std::to_string(truth.size()));
  }
  Confusion c{};
  for (std::size_t v = 0; v < pred.size(); ++v) {
    c[pred[static_cast<Vertex>(v)]][truth[static_cast<Vertex>(v)]] += 1.0;
  }
  return c;
}

double pairs(double k) { return k * (k - 1.0) / 2.0; }

}  // namespace

PairScores pair_fscore(const Partition& pred, const Partition& truth) {
  const Confusion c = confusion(pred, truth);
  double both = 0.0;
  for (const auto& row : c) both += pairs(row[0]) + pairs(row[1]);
  const double pred_same = pairs(c[0][0] + c[0][1]) + pairs(c[1][0] + c[1][1]);
  const double truth_same = pairs(c[0][0] + c[1][0]) + pairs(c[0][1] + c[1][1]);

  PairScores s;
  s.precision = pred_same > 0.0 ? both / pred_same : 0.0;
  s.recall = truth_same > 0.0 ? both / truth_same : 0.0;
  s.f_score = s.precision > 0.0 && s.recall > 0.0
                  ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
                  : 0.0;
  return s;
}

double node_error_rate(const Partition& pred, const Partition& truth) {
  const Confusion c = confusion(pred, truth);
  if (pred.size() == 0) return 0.0;
  double errors = 0.0;
  for (const auto& row : c) {
    const int majority = row[1] > row[0] ? 1 : 0;
    errors += row[1 - majority];
  }
  return errors / static_cast<double>(pred.size());
}

bool exact_recovery(const Partition& pred, const Partition& truth) {
  const Confusion c = confusion(pred, truth);
  return (c[0][1] == 0.0 && c[1][0] == 0.0) || (c[0][0] == 0.0 && c[1][1] == 0.0);
}

EvalReport evaluate(const Partition& pred, const Partition& truth) {
  const PairScores s = pair_fscore(pred, truth);
  return {s.precision, s.recall, s.f_score, node_error_rate(pred, truth), exact_recovery(pred, truth)};
}

}  // namespace gbm
