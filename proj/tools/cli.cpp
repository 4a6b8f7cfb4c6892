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

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbm/clustering.hpp"
#include "gbm/error.hpp"
#include "gbm/experiments.hpp"
#include "gbm/generators.hpp"
#include "gbm/io.hpp"
#include "gbm/metrics.hpp"
#include "gbm/motifs.hpp"
#include "gbm/thresholds.hpp"

namespace gbm::cli {
namespace {

using nlohmann::json;

std::vector<MotifKind> parse_motifs(const std::string& text) {
  std::vector<MotifKind> motifs;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) motifs.push_back(parse_motif(item));
  }
  if (motifs.empty()) throw ParameterError("empty motif list");
  return motifs;
}

LevelSource parse_levels(const std::string& text) {
  if (text == "closed-form") return LevelSource::ClosedForm;
  if (text == "expected") return LevelSource::Expected;
  throw ParameterError("levels must be 'closed-form' or 'expected', got '" + text + "'");
}

// "exact" or "f>=TAU".
SuccessRule parse_success(const std::string& text) {
  SuccessRule rule;
  if (text == "exact") return rule;
  if (text.rfind("f>=", 0) == 0) {
    rule.kind = SuccessRule::Kind::FAtLeast;
    try {
      rule.tau = std::stod(text.substr(3));
    } catch (const std::exception&) {
      throw ParameterError("bad f-score threshold in '" + text + "'");
    }
    if (!(rule.tau > 0.0 && rule.tau <= 1.0)) throw ParameterError("f-score threshold must lie in (0, 1]");
    return rule;
  }
  throw ParameterError("success rule must be 'exact' or 'f>=TAU', got '" + text + "'");
}

// Flat key/value config: JSON when the first non-blank character is '{',
// TOML-style "key = value" lines otherwise. Keys use '_' or '-'.
std::vector<CLI::ConfigItem> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<CLI::ConfigItem> items;
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw DataError("config " + path + ": " + e.what());
    }
    if (!doc.is_object()) throw DataError("config " + path + " must be a JSON object");
    auto scalar = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    for (const auto& [key, value] : doc.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const json& v : value) item.inputs.push_back(scalar(v));
      } else if (value.is_object() || value.is_null()) {
        throw DataError("config key '" + key + "' must be a scalar or a list");
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }
  std::istringstream lines(text);
  for (CLI::ConfigItem& item : CLI::ConfigTOML().from_config(lines)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    items.push_back(std::move(item));
  }
  return items;
}

// Fills options of `sub` that were not given on the command line.
void apply_config(CLI::App& sub, const std::string& path) {
  for (const CLI::ConfigItem& item : read_config(path)) {
    std::string name = item.name;
    for (char& c : name) c = c == '_' ? '-' : c;
    CLI::Option* opt = sub.get_option_no_throw("--" + name);
    if (opt == nullptr || name == "config") {
      throw ParameterError("unknown config key '" + item.name + "' for " + sub.get_name());
    }
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    opt->run_callback();
  }
}

// Writes to `path`, or to `fallback` when path is empty or "-".
void with_output(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw DataError("cannot open " + path + " for writing");
  fn(file);
  if (!file) throw DataError("failed writing " + path);
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

struct Options {
  std::string config;
  bool json = false;
  std::string out;

  // model parameters
  std::string model = "gbm";
  std::size_t n = 1000;
  double a = 0.0;
  double b = 0.0;
  double r_s = -1.0;
  double r_d = -1.0;
  std::size_t dim = 3;
  double beta_s = 0.0;
  double beta_d = 0.0;
  double p = -1.0;
  double q = -1.0;
  std::uint64_t seed = 1;
  std::string labels_out;
  std::string positions_out;

  // clustering
  std::string graph;
  bool remap = false;
  std::string motifs = "1";
  std::string levels = "closed-form";
  std::string mode = "model";
  std::uint64_t t1 = 20;
  std::uint64_t t2 = 2;
  std::uint64_t t3 = 1;
  std::string disconnected = "per-component";
  unsigned threads = 1;

  // eval
  std::string pred;
  std::string truth;

  // sweeps
  std::vector<double> b_values;
  double a_min = 10.0;
  double a_max = 40.0;
  double a_step = 2.0;
  std::size_t trials = 20;
  std::string success = "exact";
  double step = 0.5;
};

void add_output(CLI::App* sub, Options& o, bool json_flag) {
  sub->add_option("--config", o.config, "Flat key/value config file (TOML or JSON)");
  sub->add_option("-o,--out", o.out, "Output path (default: stdout)");
  if (json_flag) sub->add_flag("--json", o.json, "Emit JSON lines instead of CSV");
}

void cmd_generate(const Options& o, std::ostream& out) {
  if (o.model == "gbm") {
    const bool raw = o.r_s >= 0.0 || o.r_d >= 0.0;
    const GbmParams params = raw ? GbmParams::raw(o.n, std::max(o.r_s, 0.0), std::max(o.r_d, 0.0), o.seed)
                                 : GbmParams::scaled(o.n, o.a, o.b, o.seed);
    const GbmSample s = generate_gbm(params);
    with_output(o.out, out, [&](std::ostream& os) { write_edge_list(os, s.graph); });
    if (!o.labels_out.empty()) save_partition(s.truth, o.labels_out);
    if (!o.positions_out.empty()) with_output(o.positions_out, out, [&](std::ostream& os) { write_positions(os, s.positions); });
  } else if (o.model == "sphere") {
    SphereGbmParams params{o.n, o.dim, o.beta_s, o.beta_d, o.seed};
    const GbmSample s = generate_gbm_sphere(params);
    with_output(o.out, out, [&](std::ostream& os) { write_edge_list(os, s.graph); });
    if (!o.labels_out.empty()) save_partition(s.truth, o.labels_out);
    if (!o.positions_out.empty()) with_output(o.positions_out, out, [&](std::ostream& os) { write_positions(os, s.positions); });
  } else {
    const bool raw = o.p >= 0.0 || o.q >= 0.0;
    const SbmParams params = raw ? SbmParams{o.n, std::max(o.p, 0.0), std::max(o.q, 0.0), o.seed}
                                 : SbmParams::scaled(o.n, o.a, o.b, o.seed);
    const SbmSample s = generate_sbm(params);
    with_output(o.out, out, [&](std::ostream& os) { write_edge_list(os, s.graph); });
    if (!o.labels_out.empty()) save_partition(s.truth, o.labels_out);
    if (!o.positions_out.empty()) throw ParameterError("the SBM has no latent positions");
  }
}

void cmd_cluster(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedGraph loaded = load_edge_list(o.graph, EdgeListOptions{o.remap});
  Partition partition;
  if (o.mode == "real") {
    const RealClusterResult r = cluster_real(loaded.graph, o.t1, o.t2, o.t3);
    err << "core " << r.core_size << ", voted " << r.voted << ", unassignable " << r.unassignable << '\n';
    partition = r.partition;
  } else {
    ClusterConfig config = ClusterConfig::for_model(parse_motifs(o.motifs), o.a, o.b,
                                                    loaded.graph.num_vertices(), parse_levels(o.levels));
    config.disconnected = o.disconnected == "error" ? DisconnectedPolicy::Error : DisconnectedPolicy::PerComponent;
    config.threads = o.threads;
    const ClusterResult r = cluster(loaded.graph, config);
    if (r.components > 1) err << "graph has " << r.components << " components; each restarts at label 0\n";
    partition = r.partition;
  }
  with_output(o.out, out, [&](std::ostream& os) { write_labels(os, partition, loaded.original_ids); });
}

void cmd_eval(const Options& o, std::ostream& out) {
  const Partition truth = load_labels(o.truth);
  const Partition pred = load_labels(o.pred, truth.size());
  const EvalReport r = evaluate(pred, truth);
  const json j = {{"n", truth.size()},
                  {"precision", r.precision},
                  {"recall", r.recall},
                  {"f_score", r.f_score},
                  {"node_error_rate", r.node_error_rate},
                  {"exact_recovery", r.exact}};
  with_output(o.out, out, [&](std::ostream& os) { os << j.dump() << '\n'; });
}

void cmd_motif_stats(const Options& o, std::ostream& out) {
  const LoadedGraph loaded = load_edge_list(o.graph, EdgeListOptions{o.remap});
  const Graph& g = loaded.graph;
  auto id = [&](Vertex v) -> std::uint64_t { return loaded.original_ids.empty() ? v : loaded.original_ids[v]; };
  with_output(o.out, out, [&](std::ostream& os) {
    if (!o.json) os << "u,v,m1,m2,m3,m4\n";
    g.for_each_edge([&](Vertex u, Vertex v) {
      const MotifCounts c = count_motifs(g, u, v);
      if (o.json) {
        os << json{{"u", id(u)}, {"v", id(v)}, {"m1", c.values[0]}, {"m2", c.values[1]},
                   {"m3", c.values[2]}, {"m4", c.values[3]}}.dump()
           << '\n';
      } else {
        os << id(u) << ',' << id(v) << ',' << c.values[0] << ',' << c.values[1] << ',' << c.values[2]
           << ',' << c.values[3] << '\n';
      }
    });
  });
}

void cmd_thresholds(const Options& o, std::ostream& out) {
  const std::vector<MotifKind> motifs = parse_motifs(o.motifs);
  const LevelSource source = parse_levels(o.levels);
  with_output(o.out, out, [&](std::ostream& os) {
    if (!o.json) os << "motif,e_s,e_d,condition_met,hypothesis_met\n";
    for (MotifKind k : motifs) {
      const ThresholdPair t = source == LevelSource::ClosedForm ? closed_form_thresholds(k, o.a, o.b, o.n)
                                                             : expected_levels(k, o.a, o.b, o.n);
      if (o.json) {
        os << json{{"motif", motif_number(k)}, {"e_s", t.e_s}, {"e_d", t.e_d},
                   {"condition_met", t.condition_met}, {"hypothesis_met", t.hypothesis_met}}.dump()
           << '\n';
      } else {
        os << motif_number(k) << ',' << format_number(t.e_s) << ',' << format_number(t.e_d) << ','
           << bool_text(t.condition_met) << ',' << bool_text(t.hypothesis_met) << '\n';
      }
    }
  });
}

SweepSpec sweep_spec(const Options& o) {
  SweepSpec spec;
  spec.n = o.n;
  if (!o.b_values.empty()) spec.b_values = o.b_values;
  spec.a_min = o.a_min;
  spec.a_max = o.a_max;
  spec.a_step = o.a_step;
  spec.trials_per_cell = o.trials;
  spec.motifs = parse_motifs(o.motifs);
  spec.seed = o.seed;
  spec.success = parse_success(o.success);
  spec.levels = parse_levels(o.levels);
  spec.threads = o.threads;
  return spec;
}

void cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const SweepResult result = run_sweep(sweep_spec(o));
  for (const SweepRow& r : result.rows) {
    if (!r.warning.empty()) err << "warning: b=" << format_number(r.b) << " a=" << format_number(r.a) << ": " << r.warning << '\n';
  }
  with_output(o.out, out, [&](std::ostream& os) {
    o.json ? write_sweep_jsonl(os, result) : write_sweep_csv(os, result);
  });
}

void cmd_contrast(const Options& o, std::ostream& out) {
  const ContrastResult r = run_sbm_contrast(o.n, o.a, o.b, o.trials, o.seed, parse_motifs(o.motifs),
                                            parse_levels(o.levels), o.threads);
  with_output(o.out, out, [&](std::ostream& os) {
    if (!o.json) os << "model,b,a,trials,exact_recoveries,mean_f,mean_node_error\n";
    for (const auto& [name, row] : {std::pair{"gbm", &r.gbm}, std::pair{"sbm", &r.sbm}}) {
      if (o.json) {
        os << json{{"model", name}, {"b", row->b}, {"a", row->a}, {"trials", row->trials},
                   {"exact_recoveries", row->successes}, {"mean_f", row->mean_f},
                   {"mean_node_error", row->mean_node_error},
                   {"node_errors", name == std::string("gbm") ? r.gbm_node_errors : r.sbm_node_errors}}.dump()
           << '\n';
      } else {
        os << name << ',' << format_number(row->b) << ',' << format_number(row->a) << ',' << row->trials << ','
           << row->successes << ',' << format_number(row->mean_f) << ',' << format_number(row->mean_node_error)
           << '\n';
      }
    }
  });
}

void cmd_theory(const Options& o, std::ostream& out) {
  std::vector<double> bs = o.b_values;
  if (bs.empty()) {
    for (int b = 1; b <= 10; ++b) bs.push_back(b);
  }
  const auto rows = run_theory_curves(bs, o.n, o.step);
  with_output(o.out, out, [&](std::ostream& os) {
    o.json ? write_theory_jsonl(os, rows) : write_theory_csv(os, rows);
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Geometric block model generation, motif clustering and experiments", "gbm"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Sample a graph and its ground-truth labels");
  add_output(gen, o, false);
  gen->add_option("--model", o.model, "gbm | sphere | sbm")->check(CLI::IsMember({"gbm", "sphere", "sbm"}));
  gen->add_option("-n,--n", o.n, "Number of vertices");
  gen->add_option("-a,--a", o.a, "Intra constant: r_s or p = a ln n / n");
  gen->add_option("-b,--b", o.b, "Inter constant: r_d or q = b ln n / n");
  gen->add_option("--r-s", o.r_s, "Raw intra radius (overrides a)");
  gen->add_option("--r-d", o.r_d, "Raw inter radius (overrides b)");
  gen->add_option("--dim", o.dim, "Sphere ambient dimension");
  gen->add_option("--beta-s", o.beta_s, "Sphere intra inner-product threshold");
  gen->add_option("--beta-d", o.beta_d, "Sphere inter inner-product threshold");
  gen->add_option("--p", o.p, "Raw SBM intra probability");
  gen->add_option("--q", o.q, "Raw SBM inter probability");
  gen->add_option("--seed", o.seed);
  gen->add_option("--labels", o.labels_out, "Write ground-truth labels here");
  gen->add_option("--positions", o.positions_out, "Write latent positions here");

  auto* clu = app.add_subcommand("cluster", "Recover two clusters from an edge list");
  add_output(clu, o, false);
  clu->add_option("-g,--graph", o.graph, "Edge-list file")->required();
  clu->add_flag("--remap", o.remap, "Map sparse vertex ids to 0..k-1");
  clu->add_option("--mode", o.mode, "model (levels from a, b) | real (T1, T2, T3)")->check(CLI::IsMember({"model", "real"}));
  clu->add_option("-a,--a", o.a);
  clu->add_option("-b,--b", o.b);
  clu->add_option("--motifs", o.motifs, "Comma-separated motifs (1-4 or names)");
  clu->add_option("--levels", o.levels, "closed-form | expected");
  clu->add_option("--t1", o.t1);
  clu->add_option("--t2", o.t2);
  clu->add_option("--t3", o.t3);
  clu->add_option("--disconnected", o.disconnected, "per-component | error")
      ->check(CLI::IsMember({"per-component", "error"}));
  clu->add_option("--threads", o.threads);

  auto* ev = app.add_subcommand("eval", "Score predicted labels against the truth");
  add_output(ev, o, false);
  ev->add_option("--pred", o.pred)->required();
  ev->add_option("--truth", o.truth)->required();

  auto* ms = app.add_subcommand("motif-stats", "Per-edge motif counts");
  add_output(ms, o, true);
  ms->add_option("-g,--graph", o.graph)->required();
  ms->add_flag("--remap", o.remap);

  auto* th = app.add_subcommand("thresholds", "Decision levels for (a, b, n)");
  add_output(th, o, true);
  th->add_option("-a,--a", o.a)->required();
  th->add_option("-b,--b", o.b)->required();
  th->add_option("-n,--n", o.n);
  th->add_option("--motifs,--motif", o.motifs);
  th->add_option("--levels", o.levels);

  auto* sw = app.add_subcommand("sweep", "Success rates over a grid of (b, a)");
  add_output(sw, o, true);
  sw->add_option("-n,--n", o.n);
  sw->add_option("--b-values,--b", o.b_values, "Comma-separated b values")->delimiter(',');
  sw->add_option("--a-min", o.a_min);
  sw->add_option("--a-max", o.a_max);
  sw->add_option("--a-step", o.a_step);
  sw->add_option("--trials-per-cell,--trials", o.trials);
  sw->add_option("--motifs", o.motifs);
  sw->add_option("--seed", o.seed);
  sw->add_option("--success-rule,--success", o.success, "exact | f>=TAU");
  sw->add_option("--levels", o.levels);
  sw->add_option("--threads", o.threads);

  auto* sc = app.add_subcommand("sbm-contrast", "Same pipeline on the circle model and on an SBM");
  add_output(sc, o, true);
  sc->add_option("-n,--n", o.n);
  sc->add_option("-a,--a", o.a)->required();
  sc->add_option("-b,--b", o.b)->required();
  sc->add_option("--trials", o.trials);
  sc->add_option("--seed", o.seed);
  sc->add_option("--motifs", o.motifs);
  sc->add_option("--levels", o.levels);
  sc->add_option("--threads", o.threads);

  auto* tc = app.add_subcommand("theory-curves", "Minimal a per b for each guarantee");
  add_output(tc, o, true);
  tc->add_option("--b-values,--b", o.b_values)->delimiter(',');
  tc->add_option("-n,--n", o.n);
  tc->add_option("--step", o.step);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    for (CLI::App* sub : app.get_subcommands()) {
      if (!o.config.empty()) apply_config(*sub, o.config);
    }
    if (*gen) cmd_generate(o, out);
    if (*clu) cmd_cluster(o, out, err);
    if (*ev) cmd_eval(o, out);
    if (*ms) cmd_motif_stats(o, out);
    if (*th) cmd_thresholds(o, out);
    if (*sw) cmd_sweep(o, out, err);
    if (*sc) cmd_contrast(o, out);
    if (*tc) cmd_theory(o, out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace gbm::cli
