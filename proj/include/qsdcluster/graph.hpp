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

#ifndef QSDCLUSTER_GRAPH_HPP
#define QSDCLUSTER_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qsd {

enum class Regime { Connected, BoundedDegree };

/// Generative parameters for the partially labeled two-community
/// block model. In the Connected regime edge probabilities scale as
/// a*ln(n)/n and b*ln(n)/n; in the BoundedDegree regime as a/n and b/n.
struct SbmParams {
  int n = 0;            // node count, even
  double a = 0.0;       // within-community rate, a > b
  double b = 0.0;       // across-community rate, b > 0
  double delta = 0.0;   // revealed fraction, delta*n/2 integral
  Regime regime = Regime::Connected;

  double edge_prob_within() const;
  double edge_prob_across() const;
  int revealed_per_community() const;

  // Throws std::invalid_argument on violated invariants (odd n,
  // a <= b, p or q outside [0,1], non-integral delta*n/2).
  void validate() const;
};

/// Undirected simple graph with ground-truth communities and partial
/// labels. Adjacency lists are sorted by neighbor id. sigma(v) is
/// +1/-1, or 0 when ground truth is unknown; ell(v) is +1/-1 for
/// revealed nodes and 0 otherwise, and agrees with sigma wherever
/// both are set.
struct LabeledGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> sigma;
  std::vector<int> ell;

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  bool has_edge(int u, int v) const;
  std::size_t edge_count() const;

  std::vector<int> revealed(int side) const;
  std::vector<int> unrevealed() const;

  // Structural checks: symmetric adjacency, no self loops, sorted
  // unique neighbor lists, label consistency. Throws on violation.
  void validate() const;
};

LabeledGraph generate_plsbm(const SbmParams& params, std::uint64_t seed);

/// One connected component of a parent graph, with a global/local
/// index bijection over its (sorted) members.
struct ComponentView {
  const LabeledGraph* parent = nullptr;
  std::vector<int> members;   // sorted global ids
  std::vector<int> local_of;  // size parent->n, -1 for non-members

  int size() const { return static_cast<int>(members.size()); }
  int local(int global_id) const { return local_of[global_id]; }
  int global(int local_id) const { return members[local_id]; }

  // Induced subgraph with local ids 0..size()-1; sigma/ell carried over.
  LabeledGraph induced_subgraph() const;
};

/// Largest connected component; ties broken toward the component
/// containing the smallest node id.
ComponentView giant_component(const LabeledGraph& g);

}  // namespace qsd

#endif  // QSDCLUSTER_GRAPH_HPP
