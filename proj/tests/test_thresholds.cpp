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

#include <cmath>

#include "gbm/error.hpp"
#include "gbm/random.hpp"
#include "gbm/thresholds.hpp"

using namespace gbm;

namespace {

const double kL5000 = std::log(5000.0) / 5000.0;

}  // namespace

// Reference roots computed to 30 digits with an independent solver.
TEST_CASE("maximize_g reference points") {
  GMaximum m = maximize_g(25, 2);
  CHECK(m.nu_star == doctest::Approx(3.708768344426409).epsilon(1e-12));
  CHECK(m.g_max == doctest::Approx(11.052193167652509).epsilon(1e-13));
  m = maximize_g(10, 1);
  CHECK(m.nu_star == doctest::Approx(1.679493131824593).epsilon(1e-12));
  CHECK(m.g_max == doctest::Approx(6.525872514293502).epsilon(1e-13));
  // g'(0) <= 0: the maximum sits at the left end
  m = maximize_g(1, 0.1);
  CHECK(m.nu_star == 0.0);
  CHECK(m.g_max == doctest::Approx(std::sqrt(2.0) + std::sqrt(0.2)));
  m = maximize_g(5, 0);
  CHECK(m.nu_star == 0.0);
  CHECK(m.g_max == doctest::Approx(std::sqrt(10.0)));
  CHECK(g_function(25, 2, 1.0) == doctest::Approx(1.0 + 7.0 + std::sqrt(3.0)));
}

TEST_CASE("maximize_g is never beaten by a coarse grid") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const double b = 5.0 * rng.uniform();
    const double a = b + 40.0 * rng.uniform() + 1e-3;
    const GMaximum m = maximize_g(a, b);
    CHECK(m.nu_star >= 0.0);
    CHECK(m.nu_star <= 2 * b);
    for (int k = 0; k <= 400; ++k) {
      CHECK(g_function(a, b, std::min(2 * b, 2 * b * k / 400.0)) <= m.g_max + 1e-12);
    }
  }
}

TEST_CASE("maximize_g argument checks") {
  CHECK_THROWS_AS(maximize_g(1, 2), ParameterError);
  CHECK_THROWS_AS(maximize_g(0, 0), ParameterError);
  CHECK_THROWS_AS(maximize_g(3, -1), ParameterError);
}

TEST_CASE("common-neighbor levels") {
  const ThresholdPair t = thresholds_motif1(25, 2, 5000);
  CHECK(t.e_s == doctest::Approx(0.012775789787124356).epsilon(1e-12));
  CHECK(t.e_d == doctest::Approx(0.012714639091298045).epsilon(1e-12));
  CHECK(t.condition_met);
  CHECK(t.hypothesis_met);
  CHECK(t.motif == MotifKind::CommonNeighbor);
  CHECK_FALSE(thresholds_motif1(24.5, 2, 5000).condition_met);
  CHECK(thresholds_motif1(17.5, 1, 5000).condition_met);
  CHECK_FALSE(thresholds_motif1(17, 1, 5000).condition_met);
  // a + b - max g is the binding term when b is close to a
  const ThresholdPair close = thresholds_motif1(6, 5, 1000);
  const double l = std::log(1000.0) / 1000.0;
  CHECK(close.e_s == doctest::Approx((11 - maximize_g(6, 5).g_max) * l));
  CHECK_FALSE(close.hypothesis_met);
}

TEST_CASE("one-sided levels") {
  const ThresholdPair t = thresholds_motif2(25, 2, 5000);
  CHECK(t.e_s == doctest::Approx((2 + 12.5 + std::sqrt(6.0) + std::sqrt(37.5)) * kL5000));
  CHECK(t.e_d == doctest::Approx((23 - std::sqrt(46.0)) * kL5000));
  CHECK_FALSE(t.condition_met);
  const ThresholdPair m3 = thresholds_motif3(25, 2, 5000);
  CHECK(m3.e_s == t.e_s);
  CHECK(m3.e_d == t.e_d);
  CHECK(m3.motif == MotifKind::NbrOfVOnly);
  CHECK(thresholds_motif2(50, 2, 5000).condition_met);
  CHECK_FALSE(thresholds_motif2(49.5, 2, 5000).condition_met);
}

TEST_CASE("non-neighbor levels") {
  const ThresholdPair t = thresholds_motif4(25, 2, 5000);
  CHECK(t.e_s == doctest::Approx(0.907465781598260544).epsilon(1e-13));
  CHECK(t.e_d == doctest::Approx(0.932998080227525599).epsilon(1e-13));
  CHECK_FALSE(t.condition_met);
  CHECK(thresholds_motif4(87.5, 2, 5000).condition_met);
  CHECK_FALSE(thresholds_motif4(87, 2, 5000).condition_met);
}

TEST_CASE("threshold argument checks") {
  CHECK_THROWS_AS(thresholds_motif1(1, 2, 5000), ParameterError);
  CHECK_THROWS_AS(thresholds_motif2(5, -1, 5000), ParameterError);
  CHECK_THROWS_AS(thresholds_motif4(5, 1, 3), ParameterError);
  CHECK(closed_form_thresholds(MotifKind::NeitherNeighbor, 25, 2, 5000).e_s == thresholds_motif4(25, 2, 5000).e_s);
}

TEST_CASE("minimal a scans") {
  CHECK(minimal_a(MotifKind::CommonNeighbor, 0, 5000) == 4.0);
  CHECK(minimal_a(MotifKind::CommonNeighbor, 1, 5000) == 17.5);
  CHECK(minimal_a(MotifKind::CommonNeighbor, 2, 5000) == 25.0);
  CHECK(minimal_a(MotifKind::NbrOfUOnly, 2, 5000) == 50.0);
  CHECK(minimal_a(MotifKind::NeitherNeighbor, 2, 5000) == 87.5);
  CHECK_FALSE(minimal_a(MotifKind::NeitherNeighbor, 2, 5000, 0.5, 50.0).has_value());
  CHECK_THROWS_AS(minimal_a(MotifKind::CommonNeighbor, 1, 5000, 0.0), ParameterError);
}

TEST_CASE("minimal a grows with b and motif 1 is the weakest requirement") {
  double prev[3] = {0, 0, 0};
  for (int b = 1; b <= 10; ++b) {
    const double m1 = *minimal_a(MotifKind::CommonNeighbor, b, 5000);
    const double m2 = *minimal_a(MotifKind::NbrOfUOnly, b, 5000);
    const double m4 = *minimal_a(MotifKind::NeitherNeighbor, b, 5000);
    CHECK(m1 <= m2);
    CHECK(m1 <= m4);
    CHECK(m1 >= prev[0]);
    CHECK(m2 >= prev[1]);
    CHECK(m4 >= prev[2]);
    CHECK(m1 > 4.0 * b);
    prev[0] = m1;
    prev[1] = m2;
    prev[2] = m4;
  }
}

TEST_CASE("expected levels at (25, 2)") {
  const double rs = 25 * kL5000, rd = 2 * kL5000;
  const ThresholdPair t = expected_levels(MotifKind::CommonNeighbor, 25, 2, 5000);
  CHECK(t.e_s == doctest::Approx(2498 * rs / 5000));
  CHECK(t.e_d == doctest::Approx(4998 * 2 * rd / 5000));
  CHECK(t.condition_met);
  const ThresholdPair m2 = expected_levels(MotifKind::NbrOfUOnly, 25, 2, 5000);
  CHECK(m2.e_s == doctest::Approx((2498 * rs + 2500 * 2 * rd) / 5000));
  CHECK(m2.e_d == doctest::Approx(2499 * 2 * (rs - rd) / 5000));
  CHECK(m2.e_s < m2.e_d);
  CHECK_THROWS_AS(expected_levels(MotifKind::CommonNeighbor, 700, 1, 5000), ParameterError);
}

TEST_CASE("envelopes bound the means") {
  const std::size_t n = 5000;
  const double rs = 25 * kL5000, rd = 2 * kL5000;
  for (int k = 0; k <= 50; ++k) {
    const double x = rs * k / 50.0;
    const Envelopes e = concentration_envelopes(25, 2, n, x);
    CHECK(e.same_lower <= expected_count(MotifKind::CommonNeighbor, true, n, rs, rd, x));
    CHECK(e.diff_upper >= expected_count(MotifKind::CommonNeighbor, false, n, rs, rd, 0.0));
  }
  CHECK_THROWS_AS(concentration_envelopes(25, 2, n, 2 * rs), ParameterError);
}

TEST_CASE("envelopes separate well inside the recovery region") {
  const std::size_t n = 1000000;
  for (double b : {1.0, 2.0, 3.0}) {
    const double a = 1.5 * *minimal_a(MotifKind::CommonNeighbor, b, n);
    const double rs = a * std::log(double(n)) / double(n);
    double lowest = 1e300;
    for (int k = 0; k <= 200; ++k) lowest = std::min(lowest, concentration_envelopes(a, b, n, rs * k / 200.0).same_lower);
    CHECK(lowest >= concentration_envelopes(a, b, n, 0.0).diff_upper);
  }
}
