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

#include "qsdcluster/estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace qsd {

std::string method_name(Method m) {
  switch (m) {
    case Method::QSD: return "qsd";
    case Method::SimpleVote: return "simple_vote";
    case Method::Mixed: return "mixed";
    case Method::SpectralBaseline: return "spectral";
  }
  throw std::logic_error("unknown method");
}

Method method_from_name(const std::string& name) {
  if (name == "qsd") return Method::QSD;
  if (name == "simple_vote" || name == "vote") return Method::SimpleVote;
  if (name == "mixed") return Method::Mixed;
  if (name == "spectral" || name == "baseline") return Method::SpectralBaseline;
  throw std::invalid_argument("unknown method name: " + name);
}

ScoreVector qsd_score(const LabeledGraph& g, double tol, int max_iter,
                      DisconnectedPolicy policy) {
  const TransitionView view_plus = build_transition_view(g, 1, policy);
  const TransitionView view_minus = build_transition_view(g, -1, policy);
  const EigenPair mu_plus = principal_left_eigenvector(
      view_plus, principal_right_eigenpair(view_plus, tol, max_iter));
  const EigenPair mu_minus = principal_left_eigenvector(
      view_minus, principal_right_eigenpair(view_minus, tol, max_iter));

  // Nodes dropped by the largest-component restriction carry zero
  // quasi-stationary mass.
  auto mass = [](const TransitionView& view, const EigenPair& mu, int u) {
    const int i = view.local_of[u];
    return i >= 0 ? mu.vector[i] : 0.0;
  };

  ScoreVector out;
  out.method = Method::QSD;
  for (int u : g.unrevealed()) {
    const double q =
        mass(view_minus, mu_minus, u) - mass(view_plus, mu_plus, u);
    out.scores.emplace_back(u, q);
  }
  return out;
}

ScoreVector simple_vote_score(const LabeledGraph& g) {
  ScoreVector out;
  out.method = Method::SimpleVote;
  for (int u : g.unrevealed()) {
    int s = 0;
    for (int v : g.adj[u]) s += g.ell[v];
    out.scores.emplace_back(u, static_cast<double>(s));
  }
  return out;
}

ScoreVector mixed_score(const LabeledGraph& g, const SbmParams& params,
                        double tol, int max_iter, DisconnectedPolicy policy) {
  if (params.b <= 0.0)
    throw std::invalid_argument("mixed score requires b > 0");
  const MeanFieldConstants c =
      mean_field_constants(params.a, params.b, params.delta);
  const double weight = c.cbar * c.gamma * params.n * std::log(params.n);

  const ScoreVector q = qsd_score(g, tol, max_iter, policy);
  const ScoreVector s = simple_vote_score(g);

  ScoreVector out;
  out.method = Method::Mixed;
  out.constants = MixedConstants{c.rho, c.gamma, c.cbar};
  out.scores.reserve(q.scores.size());
  for (std::size_t i = 0; i < q.scores.size(); ++i)
    out.scores.emplace_back(q.scores[i].first,
                            weight * q.scores[i].second - s.scores[i].second);
  return out;
}

Prediction classify(const ScoreVector& scores) {
  Prediction pred;
  pred.method = scores.method;
  pred.assignments.reserve(scores.scores.size());
  for (const auto& [u, score] : scores.scores) {
    if (!std::isfinite(score))
      throw std::runtime_error("non-finite score for node " + std::to_string(u));
    pred.assignments.emplace_back(u, score >= 0.0 ? 1 : -1);
  }
  return pred;
}

Prediction spectral_baseline(const LabeledGraph& g, double tol, int max_iter) {
  const EigenPair second = second_adjacency_eigenvector(g, tol, max_iter);

  // Majority agreement on the revealed nodes resolves the global sign;
  // a tie keeps the label-aligned sign from the eigensolver.
  int agree = 0;
  for (int v = 0; v < g.n; ++v) {
    if (g.ell[v] == 0) continue;
    const int s = second.vector[v] >= 0.0 ? 1 : -1;
    agree += (s == g.ell[v]) ? 1 : -1;
  }
  const double flip = agree < 0 ? -1.0 : 1.0;

  Prediction pred;
  pred.method = Method::SpectralBaseline;
  for (int u : g.unrevealed())
    pred.assignments.emplace_back(u, flip * second.vector[u] >= 0.0 ? 1 : -1);
  return pred;
}

double evaluate(Prediction& pred, const LabeledGraph& g) {
  if (pred.assignments.empty()) {
    pred.error_rate = 0.0;
    return 0.0;
  }
  int wrong = 0;
  for (const auto& [u, label] : pred.assignments) {
    if (g.sigma[u] == 0)
      throw std::runtime_error("ground truth missing for node " +
                               std::to_string(u));
    if (label != g.sigma[u]) ++wrong;
  }
  const double rate =
      static_cast<double>(wrong) / static_cast<double>(pred.assignments.size());
  pred.error_rate = rate;
  return rate;
}

}  // namespace qsd
