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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gbm/clustering.hpp"
#include "gbm/metrics.hpp"
#include "gbm/motifs.hpp"

namespace gbm {

struct SuccessRule {
  enum class Kind { Exact, FAtLeast };
  Kind kind = Kind::Exact;
  double tau = 1.0;  // used by FAtLeast, in (0, 1]

  bool accepts(const EvalReport& report) const noexcept {
    return kind == Kind::Exact ? report.exact : report.f_score >= tau;
  }
};

/// Grid of (b, a) cells on the scaled circle model, each run for
/// trials_per_cell independent generate -> cluster -> evaluate pipelines.
/// Trial t of every cell uses trial_seed(seed, t).
struct SweepSpec {
  std::size_t n = 5000;
  std::vector<double> b_values = {2.0};
  double a_min = 10.0;
  double a_max = 40.0;
  double a_step = 2.0;
  std::size_t trials_per_cell = 20;
  std::vector<MotifKind> motifs = {MotifKind::CommonNeighbor};
  std::uint64_t seed = 1;
  SuccessRule success;
  LevelSource levels = LevelSource::ClosedForm;
  unsigned threads = 1;

  /// Throws ParameterError.
  void validate() const;
  std::vector<double> a_values() const;
};

struct SweepRow {
  double b = 0.0;
  double a = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double mean_f = 0.0;
  double mean_node_error = 0.0;
  /// Recovery guarantee holds for every configured motif.
  bool theory_condition_met = false;
  /// Non-empty when the cell was skipped (infeasible radii).
  std::string warning;

  double success_fraction() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct TrialOutcome {
  EvalReport report;
  std::size_t edges = 0;
};

TrialOutcome run_gbm_trial(std::size_t n, double a, double b, std::uint64_t seed,
                           const std::vector<MotifKind>& motifs, LevelSource levels);
TrialOutcome run_sbm_trial(std::size_t n, double a, double b, std::uint64_t seed,
                           const std::vector<MotifKind>& motifs, LevelSource levels);

SweepResult run_sweep(const SweepSpec& spec);

/// First a (ascending) whose row for `b` reaches `min_fraction` successes.
std::optional<double> empirical_minimal_a(const SweepResult& result, double b, double min_fraction = 0.9);

/// Same quantity as empirical_minimal_a over the spec grid for one b, but a
/// cell is abandoned as soon as it can no longer reach `min_fraction`.
std::optional<double> scan_minimal_a(const SweepSpec& spec, double b, double min_fraction = 0.9);

struct ContrastResult {
  SweepRow gbm;
  SweepRow sbm;
  std::vector<double> gbm_node_errors;
  std::vector<double> sbm_node_errors;
};

/// Runs the identical pipeline on the circle model and on an SBM with
/// p = a ln n / n, q = b ln n / n.
ContrastResult run_sbm_contrast(std::size_t n, double a, double b, std::size_t trials,
                                std::uint64_t seed,
                                const std::vector<MotifKind>& motifs = {MotifKind::CommonNeighbor},
                                LevelSource levels = LevelSource::ClosedForm, unsigned threads = 1);

struct TheoryCurveRow {
  double b = 0.0;
  /// Minimal a for the common-neighbor, one-sided and non-neighbor guarantees.
  std::array<std::optional<double>, 3> minimal_a;
};

std::vector<TheoryCurveRow> run_theory_curves(const std::vector<double>& b_values, std::size_t n,
                                              double step = 0.5);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_sweep_jsonl(std::ostream& out, const SweepResult& result);
void write_theory_csv(std::ostream& out, const std::vector<TheoryCurveRow>& rows);
void write_theory_jsonl(std::ostream& out, const std::vector<TheoryCurveRow>& rows);

/// Shortest round-trip-stable text for a double ("%.10g").
std::string format_number(double value);

}  // namespace gbm
