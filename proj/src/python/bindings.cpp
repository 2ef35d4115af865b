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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsdcluster/estimators.hpp"
#include "qsdcluster/harness.hpp"
#include "qsdcluster/io.hpp"
#include "qsdcluster/spectral.hpp"
#include "qsdcluster/theory.hpp"

namespace py = pybind11;
using namespace qsd;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Semi-supervised community detection via quasi-stationary "
            "distributions of absorbing random walks";

  py::enum_<Regime>(m, "Regime")
      .value("Connected", Regime::Connected)
      .value("BoundedDegree", Regime::BoundedDegree);

  py::enum_<Method>(m, "Method")
      .value("QSD", Method::QSD)
      .value("SimpleVote", Method::SimpleVote)
      .value("Mixed", Method::Mixed)
      .value("SpectralBaseline", Method::SpectralBaseline);

  py::class_<SbmParams>(m, "SbmParams")
      .def(py::init([](int n, double a, double b, double delta, Regime regime) {
             SbmParams p{n, a, b, delta, regime};
             p.validate();
             return p;
           }),
           py::arg("n"), py::arg("a"), py::arg("b"), py::arg("delta"),
           py::arg("regime") = Regime::Connected)
      .def_readonly("n", &SbmParams::n)
      .def_readonly("a", &SbmParams::a)
      .def_readonly("b", &SbmParams::b)
      .def_readonly("delta", &SbmParams::delta)
      .def_readonly("regime", &SbmParams::regime)
      .def_property_readonly("p", &SbmParams::edge_prob_within)
      .def_property_readonly("q", &SbmParams::edge_prob_across);

  py::class_<LabeledGraph>(m, "LabeledGraph")
      .def_readonly("n", &LabeledGraph::n)
      .def_readonly("sigma", &LabeledGraph::sigma)
      .def_readonly("ell", &LabeledGraph::ell)
      .def_property_readonly("edges",
                             [](const LabeledGraph& g) {
                               std::vector<std::pair<int, int>> edges;
                               for (int u = 0; u < g.n; ++u)
                                 for (int v : g.adj[u])
                                   if (u < v) edges.emplace_back(u, v);
                               return edges;
                             })
      .def("degree", &LabeledGraph::degree, py::arg("u"))
      .def("has_edge", &LabeledGraph::has_edge, py::arg("u"), py::arg("v"))
      .def("edge_count", &LabeledGraph::edge_count)
      .def("revealed", &LabeledGraph::revealed, py::arg("side"))
      .def("unrevealed", &LabeledGraph::unrevealed);

  py::class_<ComponentView>(m, "ComponentView")
      .def_readonly("members", &ComponentView::members)
      .def("size", &ComponentView::size)
      .def("induced_subgraph", &ComponentView::induced_subgraph);

  m.def("generate_plsbm", &generate_plsbm, py::arg("params"), py::arg("seed"));
  m.def("giant_component", &giant_component, py::arg("graph"),
        py::keep_alive<0, 1>());
  m.def(
      "load_edge_list",
      [](const std::string& edges, const std::string& labels, double delta,
         std::uint64_t seed) {
        return load_edge_list(edges, labels, delta, seed);
      },
      py::arg("edges_path"), py::arg("labels_path"), py::arg("delta"),
      py::arg("seed"));
  m.def("save_graph", &save_graph, py::arg("graph"), py::arg("edges_path"),
        py::arg("labels_path"), py::arg("revealed_path"));

  py::class_<EigenPair>(m, "EigenPair")
      .def_readonly("value", &EigenPair::value)
      .def_readonly("vector", &EigenPair::vector)
      .def_readonly("iterations", &EigenPair::iterations)
      .def_readonly("residual", &EigenPair::residual);

  py::class_<ScoreVector>(m, "ScoreVector")
      .def_readonly("method", &ScoreVector::method)
      .def_readonly("scores", &ScoreVector::scores);

  py::class_<Prediction>(m, "Prediction")
      .def_readonly("method", &Prediction::method)
      .def_readonly("assignments", &Prediction::assignments)
      .def_readonly("error_rate", &Prediction::error_rate);

  py::enum_<DisconnectedPolicy>(m, "DisconnectedPolicy")
      .value("Fail", DisconnectedPolicy::Fail)
      .value("LargestComponent", DisconnectedPolicy::LargestComponent);

  m.def("qsd_score", &qsd_score, py::arg("graph"), py::arg("tol") = kDefaultTol,
        py::arg("max_iter") = 0,
        py::arg("policy") = DisconnectedPolicy::Fail);
  m.def("simple_vote_score", &simple_vote_score, py::arg("graph"));
  m.def("mixed_score", &mixed_score, py::arg("graph"), py::arg("params"),
        py::arg("tol") = kDefaultTol, py::arg("max_iter") = 0,
        py::arg("policy") = DisconnectedPolicy::Fail);
  m.def("classify", &classify, py::arg("scores"));
  m.def("spectral_baseline", &spectral_baseline, py::arg("graph"),
        py::arg("tol") = kDefaultTol, py::arg("max_iter") = 0);
  m.def(
      "evaluate",
      [](Prediction& pred, const LabeledGraph& g) { return evaluate(pred, g); },
      py::arg("prediction"), py::arg("graph"));

  py::class_<MeanFieldConstants>(m, "MeanFieldConstants")
      .def_readonly("rho", &MeanFieldConstants::rho)
      .def_readonly("gamma", &MeanFieldConstants::gamma)
      .def_readonly("cbar", &MeanFieldConstants::cbar)
      .def_readonly("lambda1", &MeanFieldConstants::lambda1)
      .def_readonly("lambda2", &MeanFieldConstants::lambda2)
      .def_readonly("eigengap", &MeanFieldConstants::eigengap);

  m.def("mean_field_constants", &mean_field_constants, py::arg("a"),
        py::arg("b"), py::arg("delta"));
  m.def("mean_field_eigenvector", &mean_field_eigenvector, py::arg("constants"),
        py::arg("unrevealed_same"), py::arg("opposite"));
  m.def(
      "rate_function",
      [](double a, double b, double delta, double alpha, double beta) {
        const RateResult r = rate_function(a, b, delta, alpha, beta);
        return py::make_tuple(r.value, r.theta_star, r.boundary);
      },
      py::arg("a"), py::arg("b"), py::arg("delta"), py::arg("alpha"),
      py::arg("beta"));
  m.def(
      "rate_report",
      [](double a, double b, double delta) {
        const RateReport r = rate_report(a, b, delta);
        py::dict d;
        d["constants"] = r.constants;
        d["I_qsd"] = r.I_qsd;
        d["I_vote"] = r.I_vote;
        d["I_mixed"] = r.I_mixed;
        d["minimax"] = r.minimax_exponent;
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("delta"));

  m.def("build_transition_view", &build_transition_view, py::arg("graph"),
        py::arg("revealed_side"),
        py::arg("policy") = DisconnectedPolicy::Fail, py::keep_alive<0, 1>());
  py::class_<TransitionView>(m, "TransitionView")
      .def_readonly("retained", &TransitionView::retained)
      .def("size", &TransitionView::size);
  m.def("principal_right_eigenpair", &principal_right_eigenpair,
        py::arg("view"), py::arg("tol") = kDefaultTol, py::arg("max_iter") = 0);
  m.def("principal_left_eigenvector", &principal_left_eigenvector,
        py::arg("view"), py::arg("right"));
  m.def("second_adjacency_eigenvector", &second_adjacency_eigenvector,
        py::arg("graph"), py::arg("tol") = kDefaultTol, py::arg("max_iter") = 0);

  m.def(
      "run_single",
      [](const LabeledGraph& g, const std::vector<Method>& methods,
         const SbmParams* params, double tol, int max_iter) {
        return run_single(g, methods, params, tol, max_iter);
      },
      py::arg("graph"), py::arg("methods"), py::arg("params") = nullptr,
      py::arg("tol") = kDefaultTol, py::arg("max_iter") = 0);

  py::class_<BenchConfig>(m, "BenchConfig")
      .def(py::init([](const SbmParams& params, int trials,
                       std::uint64_t base_seed, std::vector<Method> methods,
                       double tol, int max_iter, int workers) {
             BenchConfig cfg;
             cfg.params = params;
             cfg.trials = trials;
             cfg.base_seed = base_seed;
             if (!methods.empty()) cfg.methods = std::move(methods);
             cfg.tol = tol;
             cfg.max_iter = max_iter;
             cfg.workers = workers;
             return cfg;
           }),
           py::arg("params"), py::arg("trials") = 20, py::arg("base_seed") = 1,
           py::arg("methods") = std::vector<Method>{}, py::arg("tol") = kDefaultTol,
           py::arg("max_iter") = 0, py::arg("workers") = 0);

  py::class_<MethodStats>(m, "MethodStats")
      .def_readonly("mean", &MethodStats::mean)
      .def_readonly("stddev", &MethodStats::stddev)
      .def_readonly("min", &MethodStats::min)
      .def_readonly("max", &MethodStats::max)
      .def_readonly("count", &MethodStats::count);

  py::class_<TrialResult>(m, "TrialResult")
      .def_readonly("trial", &TrialResult::trial)
      .def_readonly("seed", &TrialResult::seed)
      .def_readonly("giant_component_size", &TrialResult::giant_component_size)
      .def_readonly("recovery", &TrialResult::recovery)
      .def_readonly("seconds", &TrialResult::seconds)
      .def_readonly("error", &TrialResult::error);

  py::class_<BenchResult>(m, "BenchResult")
      .def_readonly("trials", &BenchResult::trials)
      .def("aggregate", &BenchResult::aggregate)
      .def("csv", [](const BenchResult& r) {
        std::ostringstream ss;
        write_csv(r, ss);
        return ss.str();
      })
      .def("summary_json", &bench_summary_json);

  m.def("run_bench", &run_bench, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
}
