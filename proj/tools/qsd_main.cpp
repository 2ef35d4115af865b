// Copyright 2026 The qsdcluster Authors.
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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsdcluster/estimators.hpp"
#include "qsdcluster/harness.hpp"
#include "qsdcluster/io.hpp"
#include "qsdcluster/theory.hpp"

namespace {

using nlohmann::json;

std::string sidecar(const std::string& edges_path, const std::string& suffix) {
  const auto dot = edges_path.find_last_of('.');
  const auto slash = edges_path.find_last_of('/');
  const bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? edges_path.substr(0, dot) : edges_path) + suffix;
}

qsd::Regime parse_regime(const std::string& s) {
  if (s == "connected") return qsd::Regime::Connected;
  if (s == "bounded" || s == "bounded_degree") return qsd::Regime::BoundedDegree;
  throw CLI::ValidationError("--regime", "must be 'connected' or 'bounded'");
}

std::vector<qsd::Method> parse_methods(const std::string& csv) {
  std::vector<qsd::Method> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(qsd::method_from_name(item));
  if (out.empty()) throw CLI::ValidationError("--methods", "no methods given");
  return out;
}

json prediction_json(const qsd::Prediction& pred) {
  json j;
  j["method"] = qsd::method_name(pred.method);
  if (pred.error_rate) {
    j["error_rate"] = *pred.error_rate;
    j["recovery_rate"] = 1.0 - *pred.error_rate;
  }
  j["assignments"] = json::array();
  for (const auto& [node, label] : pred.assignments)
    j["assignments"].push_back({node, label});
  return j;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::endl;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-supervised community detection via quasi-stationary "
               "distributions of absorbing random walks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a PL-SBM graph to disk");
  qsd::SbmParams gen_params;
  std::uint64_t gen_seed = 1;
  std::string gen_out, gen_regime = "connected";
  gen->add_option("--n", gen_params.n, "node count")->required();
  gen->add_option("--a", gen_params.a, "within-community rate")->required();
  gen->add_option("--b", gen_params.b, "across-community rate")->required();
  gen->add_option("--delta", gen_params.delta, "revealed fraction")->required();
  gen->add_option("--regime", gen_regime, "connected|bounded");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "edge-list output path")->required();

  // run
  auto* run = app.add_subcommand("run", "Run estimators on graph files");
  std::string run_graph, run_labels, run_revealed, run_out, run_methods =
      "qsd,simple_vote,spectral";
  double run_delta = 0.1, run_a = 0.0, run_b = 0.0, run_tol = qsd::kDefaultTol;
  std::uint64_t run_seed = 1;
  int run_max_iter = 0;
  run->add_option("--graph", run_graph, "edge-list path")->required();
  run->add_option("--labels", run_labels,
                  "labels path (default: <graph stem>.labels)");
  run->add_option("--revealed", run_revealed,
                  "revealed-ids path; if omitted, a delta-fraction is sampled");
  run->add_option("--delta", run_delta, "revealed fraction when sampling");
  run->add_option("--seed", run_seed, "sampling seed");
  run->add_option("--methods", run_methods, "comma-separated method list");
  run->add_option("--a", run_a, "within rate (enables mixed)");
  run->add_option("--b", run_b, "across rate (enables mixed)");
  run->add_option("--tol", run_tol, "eigensolver tolerance");
  run->add_option("--max-iter", run_max_iter, "eigensolver iteration cap");
  run->add_option("--out", run_out, "JSON output path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Monte Carlo benchmark");
  qsd::BenchConfig cfg;
  std::string bench_regime = "connected", bench_methods =
      "qsd,simple_vote,mixed,spectral";
  std::string bench_config_path, bench_json_out;
  bench->add_option("--config", bench_config_path,
                    "JSON config file (flags override)");
  bench->add_option("--n", cfg.params.n, "node count");
  bench->add_option("--a", cfg.params.a, "within-community rate");
  bench->add_option("--b", cfg.params.b, "across-community rate");
  bench->add_option("--delta", cfg.params.delta, "revealed fraction");
  bench->add_option("--regime", bench_regime, "connected|bounded");
  bench->add_option("--trials", cfg.trials, "trial count");
  bench->add_option("--seed", cfg.base_seed, "base seed");
  bench->add_option("--methods", bench_methods, "comma-separated method list");
  bench->add_option("--tol", cfg.tol, "eigensolver tolerance");
  bench->add_option("--max-iter", cfg.max_iter, "eigensolver iteration cap");
  bench->add_option("--workers", cfg.workers,
                    "worker threads (0 = QSD_WORKERS env or hardware)");
  bench->add_option("--out", cfg.output_path, "CSV output path");
  bench->add_option("--json", bench_json_out, "JSON summary output path");

  // rates
  auto* rates = app.add_subcommand("rates", "Theoretical rate report");
  double rates_a = 0.0, rates_b = 0.0, rates_delta = 0.0;
  std::string rates_out;
  rates->add_option("--a", rates_a, "within-community rate")->required();
  rates->add_option("--b", rates_b, "across-community rate")->required();
  rates->add_option("--delta", rates_delta, "revealed fraction")->required();
  rates->add_option("--out", rates_out, "JSON output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::ostringstream usage;
    usage << app.help();
    std::cerr << e.what() << "\n" << usage.str();
    return 1;
  }

  try {
    if (*gen) {
      gen_params.regime = parse_regime(gen_regime);
      const qsd::LabeledGraph g = qsd::generate_plsbm(gen_params, gen_seed);
      qsd::save_graph(g, gen_out, sidecar(gen_out, ".labels"),
                      sidecar(gen_out, ".revealed"));
    } else if (*run) {
      if (run_labels.empty()) run_labels = sidecar(run_graph, ".labels");
      qsd::LabeledGraph g =
          run_revealed.empty()
              ? qsd::load_edge_list(run_graph, run_labels, run_delta, run_seed)
              : qsd::load_graph(run_graph, run_labels, run_revealed);
      std::vector<qsd::Method> methods = parse_methods(run_methods);
      qsd::SbmParams params;
      const bool have_params = run_a > 0.0 && run_b > 0.0;
      if (have_params) {
        params.n = g.n;
        params.a = run_a;
        params.b = run_b;
        params.delta = run_delta;
      }
      auto preds = qsd::run_single(g, methods,
                                   have_params ? &params : nullptr, run_tol,
                                   run_max_iter);
      json j = json::array();
      for (const auto& [m, pred] : preds) j.push_back(prediction_json(pred));
      emit(run_out, j.dump(2));
    } else if (*bench) {
      if (!bench_config_path.empty()) {
        std::ifstream in(bench_config_path);
        if (!in)
          throw std::runtime_error("cannot open config: " + bench_config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        qsd::BenchConfig file_cfg = qsd::bench_config_from_json(ss.str());
        // Flags given on the command line take precedence.
        if (bench->count("--n") == 0) cfg.params.n = file_cfg.params.n;
        if (bench->count("--a") == 0) cfg.params.a = file_cfg.params.a;
        if (bench->count("--b") == 0) cfg.params.b = file_cfg.params.b;
        if (bench->count("--delta") == 0)
          cfg.params.delta = file_cfg.params.delta;
        if (bench->count("--regime") == 0)
          cfg.params.regime = file_cfg.params.regime;
        if (bench->count("--trials") == 0) cfg.trials = file_cfg.trials;
        if (bench->count("--seed") == 0) cfg.base_seed = file_cfg.base_seed;
        if (bench->count("--tol") == 0) cfg.tol = file_cfg.tol;
        if (bench->count("--max-iter") == 0) cfg.max_iter = file_cfg.max_iter;
        if (bench->count("--workers") == 0) cfg.workers = file_cfg.workers;
        if (bench->count("--methods") == 0) cfg.methods = file_cfg.methods;
        if (bench->count("--out") == 0 && !file_cfg.output_path.empty())
          cfg.output_path = file_cfg.output_path;
      }
      if (bench->count("--regime") > 0)
        cfg.params.regime = parse_regime(bench_regime);
      if (bench->count("--methods") > 0 || bench_config_path.empty())
        cfg.methods = parse_methods(bench_methods);

      const qsd::BenchResult result = qsd::run_bench(cfg);
      std::ostringstream csv;
      qsd::write_csv(result, csv);
      emit(cfg.output_path, csv.str());
      const std::string summary = qsd::bench_summary_json(result);
      if (!bench_json_out.empty())
        emit(bench_json_out, summary);
      else if (!cfg.output_path.empty())
        std::cout << summary << std::endl;
    } else if (*rates) {
      emit(rates_out, qsd::rate_report_json(
                          qsd::rate_report(rates_a, rates_b, rates_delta)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
