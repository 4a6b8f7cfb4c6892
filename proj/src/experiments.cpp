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

#include "gbm/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "gbm/error.hpp"
#include "gbm/generators.hpp"
#include "gbm/random.hpp"
#include "gbm/thresholds.hpp"

namespace gbm {
namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

TrialOutcome cluster_and_score(const Graph& graph, const Partition& truth, std::size_t n, double a,
                               double b, const std::vector<MotifKind>& motifs, LevelSource levels) {
  const ClusterConfig config = ClusterConfig::for_model(motifs, a, b, n, levels);
  const ClusterResult result = cluster(graph, config);
  return {evaluate(result.partition, truth), graph.num_edges()};
}

// Empty when the cell can be generated, otherwise the reason it cannot.
std::string infeasibility(std::size_t n, double a, double b) {
  if (a < b) return "a < b gives r_s < r_d";
  const double scale = std::log(static_cast<double>(n)) / static_cast<double>(n);
  if (a * scale > 0.5) return "r_s = a ln n / n exceeds 1/2";
  return {};
}

bool theory_condition(std::size_t n, double a, double b, const std::vector<MotifKind>& motifs) {
  return std::all_of(motifs.begin(), motifs.end(), [&](MotifKind k) {
    return closed_form_thresholds(k, a, b, n).condition_met;
  });
}

SweepRow summarize(double b, double a, const std::vector<TrialOutcome>& outcomes,
                   const SuccessRule& rule) {
  SweepRow row;
  row.b = b;
  row.a = a;
  row.trials = outcomes.size();
  double f = 0.0;
  double err = 0.0;
  for (const TrialOutcome& o : outcomes) {
    row.successes += rule.accepts(o.report) ? 1 : 0;
    f += o.report.f_score;
    err += o.report.node_error_rate;
  }
  if (!outcomes.empty()) {
    row.mean_f = f / static_cast<double>(outcomes.size());
    row.mean_node_error = err / static_cast<double>(outcomes.size());
  }
  return row;
}

std::size_t required_successes(std::size_t trials, double min_fraction) {
  return static_cast<std::size_t>(std::ceil(min_fraction * static_cast<double>(trials) - 1e-9));
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

void SweepSpec::validate() const {
  if (n < 4 || n % 2 != 0) throw ParameterError("n must be even and at least 4");
  if (b_values.empty()) throw ParameterError("at least one b value is required");
  for (double b : b_values) {
    if (!(b >= 0.0) || !std::isfinite(b)) throw ParameterError("b values must be finite and >= 0");
  }
  if (!(a_min > 0.0) || !(a_max >= a_min) || !std::isfinite(a_max)) {
    throw ParameterError("a range must satisfy 0 < a_min <= a_max");
  }
  if (!(a_step > 0.0)) throw ParameterError("a_step must be positive");
  if (trials_per_cell == 0) throw ParameterError("trials per cell must be positive");
  if (motifs.empty()) throw ParameterError("at least one motif is required");
  if (success.kind == SuccessRule::Kind::FAtLeast && !(success.tau > 0.0 && success.tau <= 1.0)) {
    throw ParameterError("f-score success threshold must lie in (0, 1]");
  }
}

std::vector<double> SweepSpec::a_values() const {
  std::vector<double> values;
  // Grid points are computed from the index so that long ranges do not drift.
  for (std::size_t k = 0;; ++k) {
    const double a = a_min + static_cast<double>(k) * a_step;
    if (a > a_max + 1e-9 * a_step) break;
    values.push_back(a);
  }
  return values;
}

TrialOutcome run_gbm_trial(std::size_t n, double a, double b, std::uint64_t seed,
                           const std::vector<MotifKind>& motifs, LevelSource levels) {
  const GbmSample sample = generate_gbm(GbmParams::scaled(n, a, b, seed));
  return cluster_and_score(sample.graph, sample.truth, n, a, b, motifs, levels);
}

TrialOutcome run_sbm_trial(std::size_t n, double a, double b, std::uint64_t seed,
                           const std::vector<MotifKind>& motifs, LevelSource levels) {
  const SbmSample sample = generate_sbm(SbmParams::scaled(n, a, b, seed));
  return cluster_and_score(sample.graph, sample.truth, n, a, b, motifs, levels);
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  struct Cell {
    double b;
    double a;
    std::string warning;
  };
  std::vector<Cell> cells;
  for (double b : spec.b_values) {
    for (double a : spec.a_values()) cells.push_back({b, a, infeasibility(spec.n, a, b)});
  }

  std::vector<std::vector<TrialOutcome>> outcomes(cells.size());
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!cells[c].warning.empty()) continue;
    outcomes[c].resize(spec.trials_per_cell);
    for (std::size_t t = 0; t < spec.trials_per_cell; ++t) jobs.emplace_back(c, t);
  }
  parallel_for(jobs.size(), spec.threads, [&](std::size_t j) {
    const auto [c, t] = jobs[j];
    outcomes[c][t] = run_gbm_trial(spec.n, cells[c].a, cells[c].b, trial_seed(spec.seed, t),
                                   spec.motifs, spec.levels);
  });

  SweepResult result;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SweepRow row = summarize(cells[c].b, cells[c].a, outcomes[c], spec.success);
    row.warning = cells[c].warning;
    row.theory_condition_met = row.warning.empty() && theory_condition(spec.n, row.a, row.b, spec.motifs);
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::optional<double> empirical_minimal_a(const SweepResult& result, double b, double min_fraction) {
  std::optional<double> best;
  for (const SweepRow& row : result.rows) {
    if (row.b != b || row.trials == 0) continue;
    if (row.successes < required_successes(row.trials, min_fraction)) continue;
    if (!best || row.a < *best) best = row.a;
  }
  return best;
}

std::optional<double> scan_minimal_a(const SweepSpec& spec, double b, double min_fraction) {
  spec.validate();
  const std::size_t trials = spec.trials_per_cell;
  const std::size_t allowed_failures = trials - required_successes(trials, min_fraction);
  const std::size_t batch = std::max(1u, spec.threads);
  for (double a : spec.a_values()) {
    if (!infeasibility(spec.n, a, b).empty()) continue;
    std::size_t failures = 0;
    for (std::size_t start = 0; start < trials && failures <= allowed_failures; start += batch) {
      const std::size_t count = std::min(batch, trials - start);
      std::vector<std::uint8_t> ok(count, 0);
      parallel_for(count, spec.threads, [&](std::size_t i) {
        const TrialOutcome o = run_gbm_trial(spec.n, a, b, trial_seed(spec.seed, start + i),
                                             spec.motifs, spec.levels);
        ok[i] = spec.success.accepts(o.report) ? 1 : 0;
      });
      failures += static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 0));
    }
    if (failures <= allowed_failures) return a;
  }
  return std::nullopt;
}

ContrastResult run_sbm_contrast(std::size_t n, double a, double b, std::size_t trials,
                                std::uint64_t seed, const std::vector<MotifKind>& motifs,
                                LevelSource levels, unsigned threads) {
  if (trials == 0) throw ParameterError("trials must be positive");
  if (const std::string why = infeasibility(n, a, b); !why.empty()) throw ParameterError(why);
  SbmParams::scaled(n, a, b, 0).validate();

  std::vector<TrialOutcome> gbm(trials);
  std::vector<TrialOutcome> sbm(trials);
  parallel_for(2 * trials, threads, [&](std::size_t j) {
    const std::size_t t = j / 2;
    const std::uint64_t s = trial_seed(seed, t);
    if (j % 2 == 0) {
      gbm[t] = run_gbm_trial(n, a, b, s, motifs, levels);
    } else {
      sbm[t] = run_sbm_trial(n, a, b, s, motifs, levels);
    }
  });

  const SuccessRule exact;
  ContrastResult result;
  result.gbm = summarize(b, a, gbm, exact);
  result.sbm = summarize(b, a, sbm, exact);
  result.gbm.theory_condition_met = result.sbm.theory_condition_met = theory_condition(n, a, b, motifs);
  for (std::size_t t = 0; t < trials; ++t) {
    result.gbm_node_errors.push_back(gbm[t].report.node_error_rate);
    result.sbm_node_errors.push_back(sbm[t].report.node_error_rate);
  }
  return result;
}

std::vector<TheoryCurveRow> run_theory_curves(const std::vector<double>& b_values, std::size_t n,
                                              double step) {
  if (!(step > 0.0)) throw ParameterError("step must be positive");
  std::vector<TheoryCurveRow> rows;
  for (double b : b_values) {
    if (!(b >= 0.0)) throw ParameterError("b values must be >= 0");
    TheoryCurveRow row;
    row.b = b;
    row.minimal_a = {minimal_a(MotifKind::CommonNeighbor, b, n, step),
                     minimal_a(MotifKind::NbrOfUOnly, b, n, step),
                     minimal_a(MotifKind::NeitherNeighbor, b, n, step)};
    rows.push_back(row);
  }
  return rows;
}

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "b,a,trials,successes,success_fraction,mean_f,mean_node_error,theory_condition_met,warning\n";
  for (const SweepRow& r : result.rows) {
    out << format_number(r.b) << ',' << format_number(r.a) << ',' << r.trials << ',' << r.successes << ','
        << format_number(r.success_fraction()) << ',' << format_number(r.mean_f) << ','
        << format_number(r.mean_node_error) << ',' << (r.theory_condition_met ? 1 : 0) << ','
        << r.warning << '\n';
  }
}

void write_sweep_jsonl(std::ostream& out, const SweepResult& result) {
  for (const SweepRow& r : result.rows) {
    nlohmann::json j = {{"b", r.b},
                        {"a", r.a},
                        {"trials", r.trials},
                        {"successes", r.successes},
                        {"success_fraction", r.success_fraction()},
                        {"mean_f", r.mean_f},
                        {"mean_node_error", r.mean_node_error},
                        {"theory_condition_met", r.theory_condition_met}};
    if (!r.warning.empty()) j["warning"] = r.warning;
    out << j.dump() << '\n';
  }
}

void write_theory_csv(std::ostream& out, const std::vector<TheoryCurveRow>& rows) {
  out << "b,motif1_min_a,motif23_min_a,motif4_min_a\n";
  for (const TheoryCurveRow& r : rows) {
    out << format_number(r.b);
    for (const auto& v : r.minimal_a) out << ',' << (v ? format_number(*v) : std::string());
    out << '\n';
  }
}

void write_theory_jsonl(std::ostream& out, const std::vector<TheoryCurveRow>& rows) {
  for (const TheoryCurveRow& r : rows) {
    const nlohmann::json j = {{"b", r.b},
                              {"motif1_min_a", optional_json(r.minimal_a[0])},
                              {"motif23_min_a", optional_json(r.minimal_a[1])},
                              {"motif4_min_a", optional_json(r.minimal_a[2])}};
    out << j.dump() << '\n';
  }
}

}  // namespace gbm
