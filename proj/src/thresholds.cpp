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

#include "gbm/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "gbm/error.hpp"

namespace gbm {
namespace {

void check_common(double a, double b, std::size_t n) {
  if (n < 4) throw ParameterError("n must be at least 4");
  if (!(b >= 0.0)) throw ParameterError("b must be non-negative");
  if (!(a >= b)) throw ParameterError("a must be at least b (r_s >= r_d)");
}

double log_scale(std::size_t n) { return std::log(static_cast<double>(n)) / static_cast<double>(n); }

}  // namespace

double g_function(double a, double b, double y) {
  return y + std::sqrt(2.0 * a - y) + std::sqrt(2.0 * b - y);
}

GMaximum maximize_g(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || !(a >= b)) {
    throw ParameterError("maximize_g requires a > 0, b >= 0 and a >= b");
  }
  if (b == 0.0) return {0.0, g_function(a, b, 0.0)};

  auto slope = [&](double y) {
    return 1.0 - 0.5 / std::sqrt(2.0 * a - y) - 0.5 / std::sqrt(2.0 * b - y);
  };
  if (slope(0.0) <= 0.0) return {0.0, g_function(a, b, 0.0)};
  // slope decreases to -inf as y -> 2b, so a sign change lies inside.
  double lo = 0.0;
  double hi = 2.0 * b;
  while (hi - lo > 1e-13 * std::max(1.0, hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  const double nu = 0.5 * (lo + hi);
  return {nu, g_function(a, b, nu)};
}

ThresholdPair thresholds_motif1(double a, double b, std::size_t n) {
  check_common(a, b, n);
  if (!(a > 0.0)) throw ParameterError("a must be positive");
  const double scale = log_scale(n);
  const double diff_term = 2.0 * b + std::sqrt(6.0 * b);
  const double same_term = std::min(a / 2.0 - std::sqrt(a), a + b - maximize_g(a, b).g_max);
  return {MotifKind::CommonNeighbor, same_term * scale, diff_term * scale, same_term >= diff_term,
          a > 4.0 * b};
}

ThresholdPair thresholds_motif2(double a, double b, std::size_t n) {
  check_common(a, b, n);
  const double scale = log_scale(n);
  const double same_term = b + a / 2.0 + std::sqrt(3.0 * b) + std::sqrt(1.5 * a);
  const double diff_term = (a - b) - std::sqrt(2.0 * (a - b));
  return {MotifKind::NbrOfUOnly, same_term * scale, diff_term * scale, diff_term > same_term,
          a > 4.0 * b};
}

ThresholdPair thresholds_motif3(double a, double b, std::size_t n) {
  ThresholdPair t = thresholds_motif2(a, b, n);
  t.motif = MotifKind::NbrOfVOnly;
  return t;
}

ThresholdPair thresholds_motif4(double a, double b, std::size_t n) {
  check_common(a, b, n);
  const double l = log_scale(n);
  const double r_s = a * l;
  const double r_d = b * l;
  const double e_s = 1.0 - 1.5 * r_s - 2.0 * r_d - std::sqrt(3.0 * r_s * l) -
                     std::sqrt(4.0 * r_d * l) - 4.0 * l / 3.0;
  const double e_d = 1.0 - 2.0 * r_s + std::sqrt(4.0 * r_s * l) + 2.0 * l / 3.0;
  const bool cond = std::abs(a - 4.0 * b) >=
                    2.0 * (std::sqrt(3.0 * a) + std::sqrt(4.0 * b) + std::sqrt(4.0 * a) + 2.0);
  return {MotifKind::NeitherNeighbor, e_s, e_d, cond, a > 4.0 * b};
}

ThresholdPair closed_form_thresholds(MotifKind kind, double a, double b, std::size_t n) {
  switch (kind) {
    case MotifKind::CommonNeighbor:
      return thresholds_motif1(a, b, n);
    case MotifKind::NbrOfUOnly:
      return thresholds_motif2(a, b, n);
    case MotifKind::NbrOfVOnly:
      return thresholds_motif3(a, b, n);
    case MotifKind::NeitherNeighbor:
      return thresholds_motif4(a, b, n);
  }
  throw ParameterError("unknown motif");
}

ThresholdPair expected_levels(MotifKind kind, double a, double b, std::size_t n) {
  check_common(a, b, n);
  const double l = log_scale(n);
  const double r_s = a * l;
  const double r_d = b * l;
  if (r_s > 0.5) throw ParameterError("a ln(n)/n exceeds 1/2");

  // Means are piecewise linear in x with kinks among these points; a grid
  // covers kinks introduced by clamping.
  auto candidates = [&](double x_max) {
    std::vector<double> xs = {0.0, r_d, 2.0 * r_d, r_s - r_d, r_s};
    constexpr int kGrid = 64;
    for (int i = 0; i <= kGrid; ++i) xs.push_back(x_max * i / kGrid);
    std::erase_if(xs, [&](double x) { return x < 0.0 || x > x_max; });
    return xs;
  };
  double same_lo = std::numeric_limits<double>::infinity(), same_hi = -same_lo;
  for (double x : candidates(r_s)) {
    const double m = expected_count(kind, true, n, r_s, r_d, x);
    same_lo = std::min(same_lo, m);
    same_hi = std::max(same_hi, m);
  }
  double diff_lo = std::numeric_limits<double>::infinity(), diff_hi = -diff_lo;
  for (double x : candidates(r_d)) {
    const double m = expected_count(kind, false, n, r_s, r_d, x);
    diff_lo = std::min(diff_lo, m);
    diff_hi = std::max(diff_hi, m);
  }
  const double nn = static_cast<double>(n);
  const bool same_high = kind == MotifKind::CommonNeighbor || kind == MotifKind::NeitherNeighbor;
  ThresholdPair t;
  t.motif = kind;
  t.hypothesis_met = a > 4.0 * b;
  if (same_high) {
    t.e_s = same_lo / nn;
    t.e_d = diff_hi / nn;
    t.condition_met = t.e_s > t.e_d;
  } else {
    t.e_s = same_hi / nn;
    t.e_d = diff_lo / nn;
    t.condition_met = t.e_s < t.e_d;
  }
  return t;
}

Envelopes concentration_envelopes(double a, double b, std::size_t n, double x) {
  check_common(a, b, n);
  const double nn = static_cast<double>(n);
  const double ln_n = std::log(nn);
  const double big_l = ln_n + std::log(ln_n);
  const double r_s = a * ln_n / nn;
  const double r_d = b * ln_n / nn;
  if (!(x >= 0.0 && x <= r_s * (1.0 + 1e-12))) throw ParameterError("x must lie in [0, r_s]");
  x = std::min(x, r_s);

  Envelopes e;
  const double same_dev = std::sqrt(big_l * (nn - 4.0) * (2.0 * r_s - x));
  if (x <= 2.0 * r_d) {
    e.same_lower = nn * (r_s + r_d - x) - 4.0 * r_s + 2.0 * x - same_dev -
                   std::sqrt(big_l * nn * (2.0 * r_d - x));
  } else {
    e.same_lower = (nn / 2.0 - 2.0) * (2.0 * r_s - x) - same_dev;
  }
  const double mu_d = (nn - 2.0) * 2.0 * r_d;
  e.diff_upper = mu_d + std::sqrt(3.0 * big_l * mu_d);
  return e;
}

std::optional<double> minimal_a(MotifKind kind, double b, std::size_t n, double step, double a_max) {
  if (!(step > 0.0)) throw ParameterError("scan step must be positive");
  const auto first = static_cast<long long>(std::floor(4.0 * b / step)) + 1;
  for (long long k = std::max(first, 1LL);; ++k) {
    const double a = static_cast<double>(k) * step;
    if (a > a_max) return std::nullopt;
    if (closed_form_thresholds(kind, a, b, n).condition_met) return a;
  }
}

}  // namespace gbm
