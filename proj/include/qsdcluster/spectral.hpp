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

#ifndef QSDCLUSTER_SPECTRAL_HPP
#define QSDCLUSTER_SPECTRAL_HPP

#include <vector>

#include "qsdcluster/graph.hpp"

namespace qsd {

inline constexpr double kDefaultTol = 1e-10;

// max_iter = 0 selects the default cap 100*sqrt(m) + 1000 for a
// problem of dimension m.
int default_max_iter(int dimension);

enum class Norm { L1, L2 };

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // indexed by local ids
  Norm normalization = Norm::L2;
  int iterations = 0;
  double residual = 0.0;
  std::vector<double> residual_history;
};

/// Row-substochastic restriction of the degree-normalized transition
/// matrix P = D^-1 A to V_i = V \ R_i, where the revealed nodes of
/// one community act as absorbing states. Degrees are full-graph
/// degrees, not subgraph degrees.
struct TransitionView {
  const LabeledGraph* base = nullptr;
  int absorbing_side = 0;      // +1 or -1
  std::vector<int> retained;   // sorted global ids of V_i
  std::vector<int> local_of;   // size base->n, -1 for absorbed nodes
  std::vector<int> degrees;    // full-graph degree per retained node

  int size() const { return static_cast<int>(retained.size()); }
  // Row sum of the implied matrix for local node u:
  // (retained-neighbor count of u) / d(u).
  double row_sum(int local_u) const;
};

/// Behavior when the subgraph induced on V_i is disconnected. The
/// quasi-stationary limit is not unique there, so the default is a
/// hard error. LargestComponent instead restricts the view to the
/// largest connected piece of V_i (ties broken by smallest minimum
/// node id); the dropped nodes carry zero quasi-stationary mass,
/// which is the pointwise limit of the power iteration on the full
/// block-diagonal matrix. Sparse bounded-degree graphs need this:
/// pendant nodes hanging off a revealed node are isolated in V_i.
enum class DisconnectedPolicy { Fail, LargestComponent };

/// Throws if some retained node has zero degree or the induced
/// subgraph on V_i is disconnected under the Fail policy; restrict to
/// the giant component first.
TransitionView build_transition_view(
    const LabeledGraph& g, int revealed_side,
    DisconnectedPolicy policy = DisconnectedPolicy::Fail);

/// Principal right eigenpair (lambda_1(P_i), pi_i) with pi_i > 0 and
/// ||pi_i||_2 = 1. Runs power iteration on the symmetric similarity
/// D^-1/2 A_i D^-1/2 and maps back by inverse square-root degree
/// scaling; the returned residual is ||P_i pi - lambda pi||_2 <= tol.
EigenPair principal_right_eigenpair(const TransitionView& view,
                                    double tol = kDefaultTol,
                                    int max_iter = 0);

/// Quasi-stationary distribution mu_i = D_i pi_i / ||D_i pi_i||_1,
/// the L1-normalized principal left eigenvector.
EigenPair principal_left_eigenvector(const TransitionView& view,
                                     const EigenPair& right);

/// Second eigenpair of the adjacency matrix by power iteration with
/// explicit deflation against the principal eigenvector. The sign is
/// aligned with the revealed labels: sum over R+ minus sum over R- of
/// the entries is made >= 0.
EigenPair second_adjacency_eigenvector(const LabeledGraph& g,
                                       double tol = kDefaultTol,
                                       int max_iter = 0);

}  // namespace qsd

#endif  // QSDCLUSTER_SPECTRAL_HPP
