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
#include <cmath>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "qsdcluster/graph.hpp"
#include "qsdcluster/io.hpp"

using namespace qsd;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::set<std::pair<int, int>> edge_set(const LabeledGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v : g.adj[u])
      if (u < v) edges.insert({u, v});
  return edges;
}

}  // namespace

TEST_CASE("params validation") {
  SbmParams p{2000, 4.0, 1.0, 0.1, Regime::Connected};
  CHECK_NOTHROW(p.validate());
  CHECK_THROWS(SbmParams{2001, 4.0, 1.0, 0.1, Regime::Connected}.validate());
  CHECK_THROWS(SbmParams{2000, 1.0, 4.0, 0.1, Regime::Connected}.validate());
  CHECK_THROWS(SbmParams{2000, 4.0, 1.0, 0.1001, Regime::Connected}.validate());
  // p = a*ln(n)/n > 1 at small n
  CHECK_THROWS(SbmParams{10, 50.0, 1.0, 0.2, Regime::Connected}.validate());
  CHECK(SbmParams{2000, 4.0, 1.0, 0.1, Regime::BoundedDegree}
            .edge_prob_within() == doctest::Approx(4.0 / 2000));
}

TEST_CASE("degenerate generation: within-complete, cross-empty") {
  // a chosen so p = a*ln(4)/4 = 1; b vanishingly small.
  SbmParams p{4, 4.0 / std::log(4.0), 1e-13, 0.5, Regime::Connected};
  const LabeledGraph g = generate_plsbm(p, 99);
  int within = 0, across = 0, revealed_plus = 0, revealed_minus = 0;
  for (int u = 0; u < 4; ++u) {
    for (int v : g.adj[u])
      if (u < v) (g.sigma[u] == g.sigma[v] ? within : across)++;
    if (g.ell[u] == 1) ++revealed_plus;
    if (g.ell[u] == -1) ++revealed_minus;
  }
  CHECK(within == 2);  // one edge inside each 2-node community
  CHECK(across == 0);
  CHECK(revealed_plus == 1);
  CHECK(revealed_minus == 1);
}

TEST_CASE("expected degree matches the analytic value over 10 seeds") {
  SbmParams p{2000, 4.0, 1.0, 0.1, Regime::Connected};
  const double expected =
      (p.n / 2 - 1) * p.edge_prob_within() + (p.n / 2) * p.edge_prob_across();
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LabeledGraph g = generate_plsbm(p, seed);
    total += 2.0 * g.edge_count() / g.n;
  }
  const double mean_degree = total / 10.0;
  CHECK(std::abs(mean_degree - expected) / expected < 0.05);
}

TEST_CASE("same seed gives identical graphs, labels, and revealed sets") {
  SbmParams p{300, 5.0, 1.5, 0.2, Regime::Connected};
  const LabeledGraph g1 = generate_plsbm(p, 42);
  const LabeledGraph g2 = generate_plsbm(p, 42);
  CHECK(g1.adj == g2.adj);
  CHECK(g1.sigma == g2.sigma);
  CHECK(g1.ell == g2.ell);
  const LabeledGraph g3 = generate_plsbm(p, 43);
  CHECK(g1.adj != g3.adj);
}

TEST_CASE("generated adjacency is symmetric with zero diagonal") {
  SbmParams p{64, 3.0, 1.0, 0.25, Regime::Connected};
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK_NOTHROW(generate_plsbm(p, seed).validate());
}

TEST_CASE("empirical edge frequencies match p and q over 200 seeds") {
  SbmParams p{200, 4.0, 1.0, 0.1, Regime::Connected};
  long long within_edges = 0, across_edges = 0;
  long long within_pairs = 0, across_pairs = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LabeledGraph g = generate_plsbm(p, seed);
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) {
        const bool same = g.sigma[u] == g.sigma[v];
        (same ? within_pairs : across_pairs)++;
        if (g.has_edge(u, v)) (same ? within_edges : across_edges)++;
      }
  }
  const double pw = p.edge_prob_within(), pa = p.edge_prob_across();
  const double se_w = std::sqrt(pw * (1 - pw) / within_pairs);
  const double se_a = std::sqrt(pa * (1 - pa) / across_pairs);
  CHECK(std::abs(1.0 * within_edges / within_pairs - pw) < 3 * se_w);
  CHECK(std::abs(1.0 * across_edges / across_pairs - pa) < 3 * se_a);
}

TEST_CASE("revealed sets are balanced subsets of their communities") {
  SbmParams p{400, 4.0, 1.0, 0.15, Regime::Connected};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const LabeledGraph g = generate_plsbm(p, seed);
    const auto r_plus = g.revealed(1);
    const auto r_minus = g.revealed(-1);
    CHECK(static_cast<int>(r_plus.size()) == p.revealed_per_community());
    CHECK(static_cast<int>(r_minus.size()) == p.revealed_per_community());
    for (int v : r_plus) CHECK(g.sigma[v] == 1);
    for (int v : r_minus) CHECK(g.sigma[v] == -1);
  }
}

TEST_CASE("community ids are shuffled, not contiguous") {
  SbmParams p{100, 4.0, 1.0, 0.1, Regime::Connected};
  const LabeledGraph g = generate_plsbm(p, 7);
  bool first_half_all_plus = true;
  for (int v = 0; v < 50; ++v) first_half_all_plus &= g.sigma[v] == 1;
  CHECK_FALSE(first_half_all_plus);
}

TEST_CASE("giant component basics") {
  SUBCASE("path plus isolated node") {
    const LabeledGraph g = [] {
      LabeledGraph g;
      g.n = 4;
      g.adj = {{1}, {0, 2}, {1}, {}};
      g.sigma.assign(4, 0);
      g.ell.assign(4, 0);
      return g;
    }();
    const ComponentView view = giant_component(g);
    CHECK(view.members == std::vector<int>{0, 1, 2});
    CHECK(view.local(3) == -1);
    CHECK(view.global(1) == 1);
  }
  SUBCASE("connected graph returns everything") {
    SbmParams p{100, 8.0, 2.0, 0.1, Regime::Connected};
    const LabeledGraph g = generate_plsbm(p, 3);
    if (giant_component(g).size() == g.n)
      CHECK(giant_component(g).members.size() == 100);
  }
  SUBCASE("equal-size tie goes to the smaller minimum id") {
    LabeledGraph g;
    g.n = 4;
    g.adj = {{1}, {0}, {3}, {2}};
    g.sigma.assign(4, 0);
    g.ell.assign(4, 0);
    CHECK(giant_component(g).members == std::vector<int>{0, 1});
  }
}

TEST_CASE("giant component output is connected and maximal") {
  SbmParams p{300, 3.0, 0.8, 0.1, Regime::BoundedDegree};
  const LabeledGraph g = generate_plsbm(p, 11);
  const ComponentView view = giant_component(g);
  const LabeledGraph sub = view.induced_subgraph();

  // BFS reachability inside the induced subgraph.
  std::vector<char> seen(sub.n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : sub.adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  CHECK(reached == sub.n);

  // Maximality: every other component is no larger.
  std::vector<char> in_giant(g.n, 0);
  for (int v : view.members) in_giant[v] = 1;
  std::vector<char> visited(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    if (visited[s] || in_giant[s]) continue;
    int size = 0;
    std::deque<int> q2{s};
    visited[s] = 1;
    while (!q2.empty()) {
      const int u = q2.front();
      q2.pop_front();
      ++size;
      for (int v : g.adj[u])
        if (!visited[v]) {
          visited[v] = 1;
          q2.push_back(v);
        }
    }
    CHECK(size <= view.size());
  }
}

TEST_CASE("edge list loader") {
  SUBCASE("duplicates collapse") {
    const auto edges = write_temp("qsdt_dup.edges", "0 1\n1 0\n");
    const auto labels = write_temp("qsdt_dup.labels", "+1\n-1\n");
    LoadStats stats;
    const LabeledGraph g =
        load_edge_list(edges.string(), labels.string(), 0.0, 1, &stats);
    CHECK(g.n == 2);
    CHECK(g.edge_count() == 1);
    CHECK(stats.duplicate_edges_dropped > 0);
  }
  SUBCASE("self loops dropped and counted") {
    const auto edges = write_temp("qsdt_loop.edges", "0 1\n2 2\n1 2\n");
    const auto labels = write_temp("qsdt_loop.labels", "+1\n+1\n-1\n");
    LoadStats stats;
    const LabeledGraph g =
        load_edge_list(edges.string(), labels.string(), 0.0, 1, &stats);
    CHECK(stats.self_loops_dropped == 1);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("label count mismatch") {
    const auto edges = write_temp("qsdt_card.edges", "0 1\n");
    const auto labels = write_temp("qsdt_card.labels", "+1\n-1\n+1\n");
    CHECK_THROWS_WITH_AS(
        load_edge_list(edges.string(), labels.string(), 0.0, 1),
        doctest::Contains("label count"), std::runtime_error);
    const auto labels_short = write_temp("qsdt_card2.labels", "+1\n");
    CHECK_THROWS_WITH_AS(
        load_edge_list(edges.string(), labels_short.string(), 0.0, 1),
        doctest::Contains("unknown node id"), std::runtime_error);
  }
  SUBCASE("malformed line carries its number") {
    const auto edges = write_temp("qsdt_bad.edges", "0 1\nnot an edge\n");
    const auto labels = write_temp("qsdt_bad.labels", "+1\n-1\n");
    CHECK_THROWS_WITH_AS(
        load_edge_list(edges.string(), labels.string(), 0.0, 1),
        doctest::Contains(":2:"), std::runtime_error);
  }
  SUBCASE("revealed sampling stays inside the giant component") {
    // Triangle 0-1-2 plus the isolated edge 3-4.
    const auto edges = write_temp("qsdt_gc.edges", "0 1\n0 2\n1 2\n3 4\n");
    const auto labels = write_temp("qsdt_gc.labels", "+1\n+1\n-1\n-1\n-1\n");
    const LabeledGraph g =
        load_edge_list(edges.string(), labels.string(), 0.9, 5);
    CHECK(g.ell[3] == 0);
    CHECK(g.ell[4] == 0);
  }
}

TEST_CASE("save / load round trip") {
  SbmParams p{120, 5.0, 1.0, 0.1, Regime::Connected};
  const LabeledGraph g = generate_plsbm(p, 17);
  const auto dir = fs::temp_directory_path();
  const auto edges = (dir / "qsdt_rt.edges").string();
  const auto labels = (dir / "qsdt_rt.labels").string();
  const auto revealed = (dir / "qsdt_rt.revealed").string();
  save_graph(g, edges, labels, revealed);
  const LabeledGraph back = load_graph(edges, labels, revealed);
  CHECK(edge_set(back) == edge_set(g));
  CHECK(back.sigma == g.sigma);
  CHECK(back.ell == g.ell);
}
