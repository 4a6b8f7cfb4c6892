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
#include <optional>

#include "gbm/motifs.hpp"

namespace gbm {

/// Decision levels for one motif, in units of count / n. `condition_met`
/// is the separation inequality of the corresponding recovery guarantee;
/// `hypothesis_met` records whether a > 4b held (values are still returned
/// when it does not).
struct ThresholdPair {
  MotifKind motif = MotifKind::CommonNeighbor;
  double e_s = 0.0;
  double e_d = 0.0;
  bool condition_met = false;
  bool hypothesis_met = false;
};

/// g(y) = y + sqrt(2a - y) + sqrt(2b - y).
double g_function(double a, double b, double y);

struct GMaximum {
  double nu_star = 0.0;
  double g_max = 0.0;
};

/// Maximizer of g over [0, 2b]. g is strictly concave there, so the root of
/// g'(y) = 1 - 1/(2 sqrt(2a-y)) - 1/(2 sqrt(2b-y)) is found by bisection,
/// falling back to y = 0 when g'(0) <= 0. Requires a > 0, b >= 0, a >= b.
GMaximum maximize_g(double a, double b);

/// Common-neighbor levels:
///   E_D = (2b + sqrt(6b)) ln n / n
///   E_S = min(a/2 - sqrt(a), a + b - max g) ln n / n
/// with condition min(...) >= 2b + sqrt(6b).
ThresholdPair thresholds_motif1(double a, double b, std::size_t n);
/// One-sided neighbor levels (motif 2, and motif 3 by symmetry):
///   E_S = (b + a/2 + sqrt(3b) + sqrt(3a/2)) ln n / n
///   E_D = ((a-b) - sqrt(2(a-b))) ln n / n,   condition E_D-term > E_S-term.
ThresholdPair thresholds_motif2(double a, double b, std::size_t n);
ThresholdPair thresholds_motif3(double a, double b, std::size_t n);
/// Non-neighbor levels from Bernstein's inequality, with r_s = a ln n/n,
/// r_d = b ln n/n and l = ln n / n:
///   E_S = 1 - 3/2 r_s - 2 r_d - sqrt(3 r_s l) - sqrt(4 r_d l) - 4l/3
///   E_D = 1 - 2 r_s + sqrt(4 r_s l) + 2l/3
/// condition |a - 4b| >= 2(sqrt(3a) + sqrt(4b) + sqrt(4a) + 2).
ThresholdPair thresholds_motif4(double a, double b, std::size_t n);
ThresholdPair closed_form_thresholds(MotifKind kind, double a, double b, std::size_t n);

/// Alternative levels: the least favourable mean count in each relation
/// (over all admissible distances), divided by n. For motifs 1 and 4 that is
/// the smallest same-cluster mean and the largest different-cluster mean;
/// for motifs 2 and 3 the reverse. condition_met reports whether the two
/// ranges of means are separated.
ThresholdPair expected_levels(MotifKind kind, double a, double b, std::size_t n);

/// Chernoff envelopes for the common-neighbor count at distance x (raw
/// units, 0 <= x <= r_s), with L = ln n + ln ln n:
///   lower same-cluster bound F_same(x), branching at x = 2 r_d, and
///   upper different-cluster bound F_diff = mu_d + sqrt(3 L mu_d).
struct Envelopes {
  double same_lower = 0.0;
  double diff_upper = 0.0;
};
Envelopes concentration_envelopes(double a, double b, std::size_t n, double x);

/// Smallest a on the grid {k * step : k >= 1, k*step > 4b} satisfying the
/// guarantee for `kind`, scanning upward to a_max.
std::optional<double> minimal_a(MotifKind kind, double b, std::size_t n, double step = 0.5,
                                double a_max = 2000.0);

}  // namespace gbm
