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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qsdcluster/estimators.hpp"
#include "test_util.hpp"

using namespace qsd;
using qsdtest::barbell6;
using qsdtest::make_graph;

namespace {

std::map<int, double> as_map(const ScoreVector& s) {
  return {s.scores.begin(), s.scores.end()};
}

// Relabels nodes by perm (new id = perm[old id]).
LabeledGraph permuted(const LabeledGraph& g, const std::vector<int>& perm) {
  LabeledGraph out;
  out.n = g.n;
  out.adj.resize(g.n);
  out.sigma.resize(g.n);
  out.ell.resize(g.n);
  for (int u = 0; u < g.n; ++u) {
    out.sigma[perm[u]] = g.sigma[u];
    out.ell[perm[u]] = g.ell[u];
    for (int v : g.adj[u]) out.adj[perm[u]].push_back(perm[v]);
  }
  for (auto& row : out.adj) std::sort(row.begin(), row.end());
  return out;
}

LabeledGraph negated(const LabeledGraph& g) {
  LabeledGraph out = g;
  for (int& s : out.sigma) s = -s;
  for (int& s : out.ell) s = -s;
  return out;
}

const SbmParams kEquivParams{60, 8.0, 2.0, 0.2, Regime::Connected};

}  // namespace

TEST_CASE("qsd score on the barbell") {
  const LabeledGraph g = barbell6();
  const ScoreVector q = qsd_score(g);
  const auto scores = as_map(q);
  REQUIRE(scores.size() == 4);

  SUBCASE("sign classifies every unrevealed node") {
    Prediction pred = classify(q);
    CHECK(evaluate(pred, g) == 0.0);
  }
  SUBCASE("community-swap symmetry negates the score") {
    // The graph is fixed by the swap 0<->5, 1<->4, 2<->3.
    CHECK(scores.at(1) == doctest::Approx(-scores.at(4)).epsilon(1e-9));
    CHECK(scores.at(2) == doctest::Approx(-scores.at(3)).epsilon(1e-9));
  }
  SUBCASE("matches the dense eigendecomposition oracle") {
    const TransitionView vp = build_transition_view(g, 1);
    const TransitionView vm = build_transition_view(g, -1);
    auto mu = [](const TransitionView& view) {
      auto [value, pi] = qsdtest::dense_principal_pair(view);
      std::vector<double> out(pi.size());
      double l1 = 0.0;
      for (std::size_t i = 0; i < pi.size(); ++i) {
        out[i] = view.degrees[i] * pi[i];
        l1 += std::abs(out[i]);
      }
      for (double& x : out) x /= l1;
      return out;
    };
    const auto mu_plus = mu(vp);
    const auto mu_minus = mu(vm);
    for (const auto& [u, score] : q.scores) {
      const double oracle =
          mu_minus[vm.local_of[u]] - mu_plus[vp.local_of[u]];
      CHECK(score == doctest::Approx(oracle).epsilon(1e-8));
    }
  }
}

TEST_CASE("simple voting") {
  SUBCASE("signed neighbor count") {
    // Node 0 adjacent to three +1 revealed and one -1 revealed.
    const LabeledGraph g = make_graph(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}},
        {1, 1, 1, 1, -1, -1}, {0, 1, 1, 1, -1, 0});
    const auto scores = as_map(simple_vote_score(g));
    CHECK(scores.at(0) == 2.0);
    CHECK(scores.at(5) == 1.0);  // one +1 revealed neighbor
  }
  SUBCASE("no revealed neighbors gives zero") {
    const LabeledGraph g = make_graph(3, {{0, 1}, {1, 2}}, {1, 1, -1},
                                      {1, 0, 0});
    CHECK(as_map(simple_vote_score(g)).at(2) == 0.0);
  }
  SUBCASE("cross-only graph inverts the vote") {
    // K_{2,2} with all edges across: a < b territory, where voting by
    // sign is systematically wrong.
    const LabeledGraph g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}},
                                      {1, 1, -1, -1}, {1, 0, -1, 0});
    Prediction pred = classify(simple_vote_score(g));
    CHECK(evaluate(pred, g) == 1.0);
  }
  SUBCASE("scores are integers bounded by the degree") {
    const LabeledGraph g = qsdtest::connected_instance(kEquivParams, 0);
    for (const auto& [u, s] : simple_vote_score(g).scores) {
      CHECK(s == std::floor(s));
      CHECK(std::abs(s) <= g.degree(u));
    }
  }
}

TEST_CASE("mixed score") {
  const LabeledGraph g = qsdtest::connected_instance(kEquivParams, 10);
  const SbmParams params = kEquivParams;
  const ScoreVector m = mixed_score(g, params);

  SUBCASE("constants match their closed forms") {
    REQUIRE(m.constants.has_value());
    CHECK(m.constants->rho == doctest::Approx(
        mean_field_constants(params.a, params.b, params.delta).rho));
  }
  SUBCASE("combination is exactly weight * Q - S") {
    const auto q = as_map(qsd_score(g));
    const auto s = as_map(simple_vote_score(g));
    const MeanFieldConstants c =
        mean_field_constants(params.a, params.b, params.delta);
    const double weight = c.cbar * c.gamma * params.n * std::log(params.n);
    for (const auto& [u, score] : m.scores)
      CHECK(score ==
            doctest::Approx(weight * q.at(u) - s.at(u)).epsilon(1e-9));
  }
  SUBCASE("reference constants at (a=4, b=1, delta=0.1)") {
    const MeanFieldConstants c = mean_field_constants(4.0, 1.0, 0.1);
    CHECK(c.rho == doctest::Approx(1.169536).epsilon(1e-6));
    CHECK(c.gamma == doctest::Approx(1.064851).epsilon(1e-6));
    CHECK(c.cbar == doctest::Approx(2.467682).epsilon(1e-6));
  }
}

TEST_CASE("classify") {
  ScoreVector s;
  s.method = Method::QSD;
  s.scores = {{3, 0.3}, {4, -0.2}, {5, 0.0}};
  const Prediction pred = classify(s);
  const std::map<int, int> got(pred.assignments.begin(),
                               pred.assignments.end());
  CHECK(got.at(3) == 1);
  CHECK(got.at(4) == -1);
  CHECK(got.at(5) == 1);  // exact zero maps to +1

  SUBCASE("invariant under positive scaling") {
    ScoreVector scaled = s;
    for (auto& [u, x] : scaled.scores) x *= 17.5;
    CHECK(classify(scaled).assignments == pred.assignments);
  }
}

TEST_CASE("spectral baseline") {
  SUBCASE("block-structured instance is classified perfectly") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 4; ++u)
      for (int v = 4; v < 8; ++v) edges.emplace_back(u, v);
    const LabeledGraph g = make_graph(8, edges, {1, 1, 1, 1, -1, -1, -1, -1},
                                      {1, 0, 0, 0, -1, 0, 0, 0});
    Prediction pred = spectral_baseline(g);
    CHECK(evaluate(pred, g) == 0.0);
  }
  SUBCASE("recovers communities on a dense generated instance") {
    const LabeledGraph g = qsdtest::connected_instance(
        SbmParams{100, 12.0, 1.0, 0.1, Regime::Connected}, 20);
    Prediction pred = spectral_baseline(g);
    CHECK(evaluate(pred, g) <= 0.05);
  }
}

TEST_CASE("evaluate") {
  const LabeledGraph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}},
                                    {1, 1, -1, -1}, {0, 0, 0, 0});
  Prediction pred;
  pred.method = Method::SimpleVote;
  SUBCASE("all correct") {
    pred.assignments = {{0, 1}, {1, 1}, {2, -1}, {3, -1}};
    CHECK(evaluate(pred, g) == 0.0);
    CHECK(pred.error_rate == 0.0);
  }
  SUBCASE("all wrong") {
    pred.assignments = {{0, -1}, {1, -1}, {2, 1}, {3, 1}};
    CHECK(evaluate(pred, g) == 1.0);
  }
  SUBCASE("half wrong") {
    pred.assignments = {{0, 1}, {1, -1}, {2, -1}, {3, 1}};
    CHECK(evaluate(pred, g) == 0.5);
  }
  SUBCASE("missing ground truth is an error") {
    LabeledGraph blank = g;
    blank.sigma[1] = 0;
    pred.assignments = {{0, 1}, {1, 1}};
    CHECK_THROWS_AS(evaluate(pred, blank), std::runtime_error);
  }
}

TEST_CASE("community equivariance: negating the labels negates the scores") {
  const LabeledGraph g = qsdtest::connected_instance(kEquivParams, 30);
  const LabeledGraph gneg = negated(g);
  const SbmParams params = kEquivParams;

  const auto q = as_map(qsd_score(g));
  const auto qn = as_map(qsd_score(gneg));
  const auto s = as_map(simple_vote_score(g));
  const auto sn = as_map(simple_vote_score(gneg));
  const auto m = as_map(mixed_score(g, params));
  const auto mn = as_map(mixed_score(gneg, params));
  for (const auto& [u, val] : q) {
    CHECK(qn.at(u) == doctest::Approx(-val).epsilon(1e-9));
    CHECK(sn.at(u) == -s.at(u));
    CHECK(mn.at(u) == doctest::Approx(-m.at(u)).epsilon(1e-9));
  }
}

TEST_CASE("permutation equivariance: scores follow the relabeling") {
  const LabeledGraph g = qsdtest::connected_instance(kEquivParams, 40);
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(123);
  std::shuffle(perm.begin(), perm.end(), rng);
  const LabeledGraph gp = permuted(g, perm);

  const auto q = as_map(qsd_score(g));
  const auto qp = as_map(qsd_score(gp));
  const auto s = as_map(simple_vote_score(g));
  const auto sp = as_map(simple_vote_score(gp));
  for (const auto& [u, val] : q) {
    CHECK(qp.at(perm[u]) == doctest::Approx(val).epsilon(1e-9));
    CHECK(sp.at(perm[u]) == s.at(u));
  }

  // Predictions permute exactly.
  const Prediction pred = classify(qsd_score(g));
  const Prediction predp = classify(qsd_score(gp));
  const std::map<int, int> got(predp.assignments.begin(),
                               predp.assignments.end());
  for (const auto& [u, label] : pred.assignments)
    CHECK(got.at(perm[u]) == label);
}

TEST_CASE("classifications are stable under tolerance doubling") {
  const LabeledGraph g = qsdtest::connected_instance(
      SbmParams{200, 6.0, 1.5, 0.1, Regime::Connected}, 50);
  const SbmParams params{200, 6.0, 1.5, 0.1, Regime::Connected};
  for (Method method : {Method::QSD, Method::Mixed}) {
    const auto score = [&](double tol) {
      return method == Method::QSD ? qsd_score(g, tol)
                                   : mixed_score(g, params, tol);
    };
    CHECK(classify(score(1e-10)).assignments ==
          classify(score(2e-10)).assignments);
  }
}
