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

#include "qsdcluster/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace qsd {
namespace {

bool wants(const std::vector<Method>& methods, Method m) {
  return std::find(methods.begin(), methods.end(), m) != methods.end();
}

int resolve_workers(int configured) {
  if (configured > 0) return configured;
  if (const char* env = std::getenv("QSD_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

std::map<Method, Prediction> run_single(const LabeledGraph& g,
                                        const std::vector<Method>& methods,
                                        const SbmParams* params, double tol,
                                        int max_iter) {
  if (wants(methods, Method::Mixed) && params == nullptr)
    throw std::invalid_argument(
        "mixed: generative parameters (a, b, delta) are required");

  const ComponentView giant = giant_component(g);
  const LabeledGraph sub = giant.induced_subgraph();
  const bool truth = std::all_of(sub.sigma.begin(), sub.sigma.end(),
                                 [](int s) { return s != 0; });

  auto to_global = [&](Prediction pred) {
    for (auto& [u, label] : pred.assignments) u = giant.global(u);
    return pred;
  };

  // Sparse bounded-degree graphs routinely strand a few nodes when a
  // revealed set is removed; the connected regime keeps the hard error.
  const DisconnectedPolicy policy =
      params != nullptr && params->regime == Regime::BoundedDegree
          ? DisconnectedPolicy::LargestComponent
          : DisconnectedPolicy::Fail;

  std::map<Method, Prediction> out;
  for (Method m : methods) {
    try {
      Prediction pred;
      switch (m) {
        case Method::QSD:
          pred = classify(qsd_score(sub, tol, max_iter, policy));
          break;
        case Method::SimpleVote:
          pred = classify(simple_vote_score(sub));
          break;
        case Method::Mixed:
          pred = classify(mixed_score(sub, *params, tol, max_iter, policy));
          break;
        case Method::SpectralBaseline:
          pred = spectral_baseline(sub, tol, max_iter);
          break;
      }
      if (truth) evaluate(pred, sub);
      out[m] = to_global(std::move(pred));
    } catch (const std::exception& e) {
      throw std::runtime_error(method_name(m) + ": " + e.what());
    }
  }
  return out;
}

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  cfg.params.validate();

  BenchResult result;
  result.config = cfg;
  result.trials.resize(cfg.trials);

  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int t = next.fetch_add(1);
      if (t >= cfg.trials) return;
      TrialResult& tr = result.trials[t];
      tr.trial = t;
      tr.seed = cfg.base_seed + static_cast<std::uint64_t>(t);
      const auto start = std::chrono::steady_clock::now();
      try {
        const LabeledGraph g = generate_plsbm(cfg.params, tr.seed);
        tr.giant_component_size = giant_component(g).size();
        auto preds =
            run_single(g, cfg.methods, &cfg.params, cfg.tol, cfg.max_iter);
        for (const auto& [m, pred] : preds)
          tr.recovery[m] = 1.0 - pred.error_rate.value();
      } catch (const std::exception& e) {
        tr.error = e.what();
      }
      tr.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
              .count();
    }
  };

  const int workers = std::min(resolve_workers(cfg.workers), cfg.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  const int failed = static_cast<int>(
      std::count_if(result.trials.begin(), result.trials.end(),
                    [](const TrialResult& t) { return t.failed(); }));
  if (failed * 5 >= cfg.trials && failed > 0) {
    std::string detail;
    for (const auto& t : result.trials)
      if (t.failed()) {
        detail = t.error;
        break;
      }
    throw std::runtime_error(std::to_string(failed) + "/" +
                             std::to_string(cfg.trials) +
                             " trials failed (first error: " + detail + ")");
  }
  return result;
}

std::map<Method, MethodStats> BenchResult::aggregate() const {
  std::map<Method, MethodStats> out;
  for (Method m : config.methods) {
    std::vector<double> xs;
    for (const auto& t : trials) {
      const auto it = t.recovery.find(m);
      if (it != t.recovery.end()) xs.push_back(it->second);
    }
    MethodStats s;
    s.count = static_cast<int>(xs.size());
    if (!xs.empty()) {
      double sum = 0.0;
      s.min = s.max = xs[0];
      for (double x : xs) {
        sum += x;
        s.min = std::min(s.min, x);
        s.max = std::max(s.max, x);
      }
      s.mean = sum / xs.size();
      double var = 0.0;
      for (double x : xs) var += (x - s.mean) * (x - s.mean);
      s.stddev = xs.size() > 1 ? std::sqrt(var / (xs.size() - 1)) : 0.0;
    }
    out[m] = s;
  }
  return out;
}

void write_csv(const BenchResult& result, std::ostream& out) {
  const auto now = std::chrono::system_clock::to_time_t(
      std::chrono::system_clock::now());
  out << "# qsd bench, generated " << std::put_time(std::gmtime(&now), "%FT%TZ")
      << "\n";
  out << "trial,method,recovery_rate,error_rate,giant_component_size,seconds\n";
  out << std::setprecision(10);
  for (const auto& t : result.trials) {
    if (t.failed()) continue;
    for (Method m : result.config.methods) {
      const auto it = t.recovery.find(m);
      if (it == t.recovery.end()) continue;
      out << t.trial << ',' << method_name(m) << ',' << it->second << ','
          << 1.0 - it->second << ',' << t.giant_component_size << ','
          << std::setprecision(4) << t.seconds << std::setprecision(10)
          << '\n';
    }
  }
}

std::string bench_summary_json(const BenchResult& result) {
  nlohmann::json j;
  const auto& cfg = result.config;
  j["config"] = {
      {"n", cfg.params.n},
      {"a", cfg.params.a},
      {"b", cfg.params.b},
      {"delta", cfg.params.delta},
      {"regime",
       cfg.params.regime == Regime::Connected ? "connected" : "bounded_degree"},
      {"trials", cfg.trials},
      {"base_seed", cfg.base_seed},
      {"tol", cfg.tol},
      {"max_iter", cfg.max_iter}};
  j["config"]["methods"] = nlohmann::json::array();
  for (Method m : cfg.methods) j["config"]["methods"].push_back(method_name(m));

  j["aggregates"] = nlohmann::json::object();
  for (const auto& [m, s] : result.aggregate())
    j["aggregates"][method_name(m)] = {{"mean", s.mean},
                                       {"stddev", s.stddev},
                                       {"min", s.min},
                                       {"max", s.max},
                                       {"count", s.count}};
  j["errors"] = nlohmann::json::array();
  for (const auto& t : result.trials)
    if (t.failed()) j["errors"].push_back({{"trial", t.trial}, {"error", t.error}});
  return j.dump(2);
}

BenchConfig bench_config_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  BenchConfig cfg;
  cfg.params.n = j.at("n").get<int>();
  cfg.params.a = j.at("a").get<double>();
  cfg.params.b = j.at("b").get<double>();
  cfg.params.delta = j.at("delta").get<double>();
  const std::string regime = j.value("regime", "connected");
  if (regime == "connected")
    cfg.params.regime = Regime::Connected;
  else if (regime == "bounded_degree" || regime == "bounded")
    cfg.params.regime = Regime::BoundedDegree;
  else
    throw std::invalid_argument("unknown regime: " + regime);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.base_seed = j.value("base_seed", cfg.base_seed);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  cfg.workers = j.value("workers", cfg.workers);
  cfg.output_path = j.value("output_path", cfg.output_path);
  if (j.contains("methods")) {
    cfg.methods.clear();
    for (const auto& name : j.at("methods"))
      cfg.methods.push_back(method_from_name(name.get<std::string>()));
  }
  return cfg;
}

}  // namespace qsd
