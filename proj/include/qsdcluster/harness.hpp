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

#ifndef QSDCLUSTER_HARNESS_HPP
#define QSDCLUSTER_HARNESS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qsdcluster/estimators.hpp"
#include "qsdcluster/graph.hpp"

namespace qsd {

struct BenchConfig {
  SbmParams params;
  int trials = 20;
  std::uint64_t base_seed = 1;  // per-trial seed = base_seed + trial index
  std::vector<Method> methods = {Method::QSD, Method::SimpleVote,
                                 Method::Mixed, Method::SpectralBaseline};
  std::string output_path;
  double tol = kDefaultTol;
  int max_iter = 0;
  int workers = 0;  // 0: QSD_WORKERS env var, else hardware concurrency
};

struct TrialResult {
  int trial = 0;
  std::uint64_t seed = 0;
  int giant_component_size = 0;
  // method -> (recovery_rate, error_rate); absent on failure
  std::map<Method, double> recovery;
  double seconds = 0.0;
  std::string error;  // empty on success

  bool failed() const { return !error.empty(); }
};

struct MethodStats {
  double mean = 0.0, stddev = 0.0, min = 0.0, max = 0.0;
  int count = 0;
};

struct BenchResult {
  BenchConfig config;
  std::vector<TrialResult> trials;  // ordered by trial index

  std::map<Method, MethodStats> aggregate() const;
};

/// Runs the requested methods on the giant component of g. Only the
/// machinery a requested method needs is computed (SimpleVote alone
/// triggers no eigensolve). Predictions carry global node ids; the
/// error rate is filled in when ground truth is available. Mixed
/// requires params.
std::map<Method, Prediction> run_single(const LabeledGraph& g,
                                        const std::vector<Method>& methods,
                                        const SbmParams* params = nullptr,
                                        double tol = kDefaultTol,
                                        int max_iter = 0);

/// Monte Carlo benchmark: one fresh PL-SBM per trial. Trials run
/// concurrently; a failing trial is recorded and skipped, but more
/// than 20% failures raise an error.
BenchResult run_bench(const BenchConfig& cfg);

/// CSV schema: header
///   trial,method,recovery_rate,error_rate,giant_component_size,seconds
/// one row per (trial, method), preceded by a '#' timestamp comment.
void write_csv(const BenchResult& result, std::ostream& out);

std::string bench_summary_json(const BenchResult& result);

BenchConfig bench_config_from_json(const std::string& text);

}  // namespace qsd

#endif  // QSDCLUSTER_HARNESS_HPP
