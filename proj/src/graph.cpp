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

#include "qsdcluster/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qsd {

double SbmParams::edge_prob_within() const {
  return regime == Regime::Connected ? a * std::log(n) / n : a / n;
}

double SbmParams::edge_prob_across() const {
  return regime == Regime::Connected ? b * std::log(n) / n : b / n;
}

int SbmParams::revealed_per_community() const {
  return static_cast<int>(std::llround(delta * n / 2.0));
}

void SbmParams::validate() const {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("n must be a positive even integer");
  if (b <= 0.0) throw std::invalid_argument("b must be positive");
  if (a <= b) throw std::invalid_argument("a must exceed b");
  if (delta <= 0.0 || delta >= 1.0)
    throw std::invalid_argument("delta must lie in (0,1)");
  const double half = delta * n / 2.0;
  if (std::abs(half - std::llround(half)) > 1e-9)
    throw std::invalid_argument("delta*n/2 must be an integer");
  if (edge_prob_within() > 1.0 || edge_prob_across() > 1.0)
    throw std::invalid_argument(
        "edge probability exceeds 1; increase n or reduce a, b");
}

bool LabeledGraph::has_edge(int u, int v) const {
  const auto& row = adj[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t LabeledGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj) total += row.size();
  return total / 2;
}

std::vector<int> LabeledGraph::revealed(int side) const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (ell[v] == side) out.push_back(v);
  return out;
}

std::vector<int> LabeledGraph::unrevealed() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (ell[v] == 0) out.push_back(v);
  return out;
}

void LabeledGraph::validate() const {
  if (static_cast<int>(adj.size()) != n ||
      static_cast<int>(sigma.size()) != n || static_cast<int>(ell.size()) != n)
    throw std::runtime_error("graph field sizes disagree with n");
  for (int u = 0; u < n; ++u) {
    const auto& row = adj[u];
    if (!std::is_sorted(row.begin(), row.end()))
      throw std::runtime_error("adjacency list not sorted");
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::runtime_error("duplicate edge in adjacency list");
    for (int v : row) {
      if (v < 0 || v >= n) throw std::runtime_error("neighbor id out of range");
      if (v == u) throw std::runtime_error("self loop present");
      if (!has_edge(v, u)) throw std::runtime_error("asymmetric adjacency");
    }
    if (ell[u] != 0 && sigma[u] != 0 && ell[u] != sigma[u])
      throw std::runtime_error("partial label disagrees with ground truth");
  }
}

LabeledGraph generate_plsbm(const SbmParams& params, std::uint64_t seed) {
  params.validate();
  const int n = params.n;
  std::mt19937_64 rng(seed);

  LabeledGraph g;
  g.n = n;
  g.adj.resize(n);
  g.sigma.assign(n, 0);
  g.ell.assign(n, 0);

  // Communities are assigned to a random permutation of the ids so
  // community membership is not inferable from the index.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) g.sigma[perm[i]] = i < n / 2 ? 1 : -1;

  const int r = params.revealed_per_community();
  for (int side : {1, -1}) {
    std::vector<int> community;
    for (int v = 0; v < n; ++v)
      if (g.sigma[v] == side) community.push_back(v);
    std::shuffle(community.begin(), community.end(), rng);
    for (int i = 0; i < r; ++i) g.ell[community[i]] = side;
  }

  const double p = params.edge_prob_within();
  const double q = params.edge_prob_across();
  std::bernoulli_distribution within(p), across(q);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same = g.sigma[u] == g.sigma[v];
      if (same ? within(rng) : across(rng)) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
      }
    }
  }
  return g;
}

LabeledGraph ComponentView::induced_subgraph() const {
  LabeledGraph g;
  g.n = size();
  g.adj.resize(g.n);
  g.sigma.resize(g.n);
  g.ell.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    const int u = members[i];
    g.sigma[i] = parent->sigma[u];
    g.ell[i] = parent->ell[u];
    for (int v : parent->adj[u]) {
      const int j = local_of[v];
      if (j >= 0) g.adj[i].push_back(j);
    }
    // members and parent lists are sorted, so rows stay sorted.
  }
  return g;
}

ComponentView giant_component(const LabeledGraph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<int> best;
  std::deque<int> queue;
  int comp_id = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    comp[s] = comp_id;
    queue.push_back(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (int v : g.adj[u]) {
        if (comp[v] < 0) {
          comp[v] = comp_id;
          queue.push_back(v);
        }
      }
    }
    // Scanning ids in increasing order means ties already favor the
    // component containing the smallest node id.
    if (members.size() > best.size()) best = std::move(members);
    ++comp_id;
  }
  std::sort(best.begin(), best.end());

  ComponentView view;
  view.parent = &g;
  view.members = std::move(best);
  view.local_of.assign(g.n, -1);
  for (int i = 0; i < view.size(); ++i) view.local_of[view.members[i]] = i;
  return view;
}

}  // namespace qsd
