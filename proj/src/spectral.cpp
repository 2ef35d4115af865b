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

#include "qsdcluster/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qsd {
namespace {

double norm2(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

void scale(std::vector<double>& v, double s) {
  for (double& x : v) x *= s;
}

// Power iteration for the dominant eigenpair of a symmetric operator,
// optionally deflated against a known eigenvector (projected out of
// both the iterate and every product). Residual criterion:
// ||M v - lambda v||_2 <= tol with ||v||_2 = 1.
template <typename MatVec>
EigenPair power_iterate(int m, const MatVec& matvec, std::vector<double> v,
                        double tol, int max_iter,
                        const std::vector<double>* deflate) {
  auto project = [&](std::vector<double>& x) {
    if (!deflate) return;
    const double c = dot(*deflate, x);
    for (int i = 0; i < m; ++i) x[i] -= c * (*deflate)[i];
  };

  project(v);
  const double nv = norm2(v);
  if (nv == 0.0) throw std::runtime_error("degenerate start vector");
  scale(v, 1.0 / nv);

  EigenPair out;
  out.vector.assign(m, 0.0);
  std::vector<double>& y = out.vector;
  for (int it = 1; it <= max_iter; ++it) {
    matvec(v, y);
    project(y);
    const double lambda = dot(v, y);
    double res = 0.0;
    for (int i = 0; i < m; ++i) {
      const double r = y[i] - lambda * v[i];
      res += r * r;
    }
    res = std::sqrt(res);
    out.value = lambda;
    out.iterations = it;
    out.residual = res;
    out.residual_history.push_back(res);
    if (res <= tol) {
      out.vector = v;
      return out;
    }
    const double ny = norm2(y);
    if (ny == 0.0) throw std::runtime_error("iterate collapsed to zero");
    for (int i = 0; i < m; ++i) v[i] = y[i] / ny;
  }
  throw std::runtime_error(
      "power iteration did not converge after " + std::to_string(max_iter) +
      " iterations (last residual " + std::to_string(out.residual) + ")");
}

// Connected components of the subgraph induced on the retained set,
// each sorted ascending; component order is by smallest member id.
std::vector<std::vector<int>> induced_components(const TransitionView& view) {
  const int m = view.size();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<int>> components;
  for (int start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<int> members{start};
    seen[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : view.base->adj[view.retained[u]]) {
        const int j = view.local_of[v];
        if (j >= 0 && !seen[j]) {
          seen[j] = 1;
          members.push_back(j);
          queue.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

}  // namespace

int default_max_iter(int dimension) {
  return static_cast<int>(100.0 * std::sqrt(std::max(dimension, 1))) + 1000;
}

double TransitionView::row_sum(int local_u) const {
  int kept = 0;
  for (int v : base->adj[retained[local_u]])
    if (local_of[v] >= 0) ++kept;
  return static_cast<double>(kept) / degrees[local_u];
}

TransitionView build_transition_view(const LabeledGraph& g, int revealed_side,
                                     DisconnectedPolicy policy) {
  if (revealed_side != 1 && revealed_side != -1)
    throw std::invalid_argument("revealed_side must be +1 or -1");
  TransitionView view;
  view.base = &g;
  view.absorbing_side = revealed_side;
  view.local_of.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) {
    if (g.ell[v] == revealed_side) continue;
    view.local_of[v] = static_cast<int>(view.retained.size());
    view.retained.push_back(v);
  }
  if (view.retained.empty())
    throw std::runtime_error("transition view is empty");

  if (policy == DisconnectedPolicy::Fail) {
    for (int v : view.retained)
      if (g.degree(v) == 0)
        throw std::runtime_error(
            "node " + std::to_string(v) +
            " has zero degree; restrict to the giant component first");
  }
  auto components = induced_components(view);
  if (components.size() > 1) {
    if (policy == DisconnectedPolicy::Fail)
      throw std::runtime_error(
          "induced subgraph on the retained nodes is disconnected; the "
          "quasi-stationary limit is not unique (restrict to the giant "
          "component first)");
    const auto largest = std::max_element(
        components.begin(), components.end(),
        [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<int> keep;
    keep.reserve(largest->size());
    for (int local : *largest) keep.push_back(view.retained[local]);
    std::fill(view.local_of.begin(), view.local_of.end(), -1);
    view.retained = std::move(keep);
    for (std::size_t i = 0; i < view.retained.size(); ++i)
      view.local_of[view.retained[i]] = static_cast<int>(i);
  }
  view.degrees.reserve(view.retained.size());
  for (int v : view.retained) {
    if (g.degree(v) == 0)
      throw std::runtime_error(
          "node " + std::to_string(v) +
          " has zero degree; restrict to the giant component first");
    view.degrees.push_back(g.degree(v));
  }
  return view;
}

EigenPair principal_right_eigenpair(const TransitionView& view, double tol,
                                    int max_iter) {
  const int m = view.size();
  if (max_iter <= 0) max_iter = default_max_iter(m);

  std::vector<double> inv_sqrt_deg(m);
  int dmin = view.degrees[0], dmax = view.degrees[0];
  for (int i = 0; i < m; ++i) {
    inv_sqrt_deg[i] = 1.0 / std::sqrt(static_cast<double>(view.degrees[i]));
    dmin = std::min(dmin, view.degrees[i]);
    dmax = std::max(dmax, view.degrees[i]);
  }

  // Symmetric similarity D^1/2 P_i D^-1/2 = D^-1/2 A_i D^-1/2; its
  // residual controls the P_i residual up to sqrt(dmax/dmin) after the
  // diagonal mapping, hence the tightened tolerance.
  auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int v : view.base->adj[view.retained[i]]) {
        const int j = view.local_of[v];
        if (j >= 0) acc += inv_sqrt_deg[j] * x[j];
      }
      y[i] = inv_sqrt_deg[i] * acc;
    }
  };

  const double sym_tol =
      tol * std::sqrt(static_cast<double>(dmin) / dmax) * 0.5;
  EigenPair sym = power_iterate(m, matvec, std::vector<double>(m, 1.0),
                                sym_tol, max_iter, nullptr);

  EigenPair out;
  out.value = sym.value;
  out.normalization = Norm::L2;
  out.iterations = sym.iterations;
  out.residual_history = std::move(sym.residual_history);
  out.vector.resize(m);
  for (int i = 0; i < m; ++i) out.vector[i] = inv_sqrt_deg[i] * sym.vector[i];
  double s = 0.0;
  for (double x : out.vector) s += x;
  if (s < 0.0) scale(out.vector, -1.0);  // Perron sign convention
  scale(out.vector, 1.0 / norm2(out.vector));

  // Report the residual of the actual substochastic matrix.
  std::vector<double> pv(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double acc = 0.0;
    for (int v : view.base->adj[view.retained[i]]) {
      const int j = view.local_of[v];
      if (j >= 0) acc += out.vector[j];
    }
    pv[i] = acc / view.degrees[i];
  }
  double res = 0.0;
  for (int i = 0; i < m; ++i) {
    const double r = pv[i] - out.value * out.vector[i];
    res += r * r;
  }
  out.residual = std::sqrt(res);
  return out;
}

EigenPair principal_left_eigenvector(const TransitionView& view,
                                     const EigenPair& right) {
  const int m = view.size();
  EigenPair out;
  out.value = right.value;
  out.normalization = Norm::L1;
  out.iterations = 0;
  out.vector.resize(m);
  double l1 = 0.0;
  for (int i = 0; i < m; ++i) {
    out.vector[i] = view.degrees[i] * right.vector[i];
    l1 += std::abs(out.vector[i]);
  }
  scale(out.vector, 1.0 / l1);

  // Left residual ||mu^T P_i - lambda mu^T||_1.
  std::vector<double> mp(m, 0.0);
  for (int i = 0; i < m; ++i) {
    const double w = out.vector[i] / view.degrees[i];
    for (int v : view.base->adj[view.retained[i]]) {
      const int j = view.local_of[v];
      if (j >= 0) mp[j] += w;
    }
  }
  double res = 0.0;
  for (int i = 0; i < m; ++i)
    res += std::abs(mp[i] - out.value * out.vector[i]);
  out.residual = res;
  return out;
}

EigenPair second_adjacency_eigenvector(const LabeledGraph& g, double tol,
                                       int max_iter) {
  const int m = g.n;
  if (max_iter <= 0) max_iter = default_max_iter(m);
  auto matvec = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int v : g.adj[i]) acc += x[v];
      y[i] = acc;
    }
  };

  EigenPair first = power_iterate(m, matvec, std::vector<double>(m, 1.0), tol,
                                  max_iter, nullptr);

  // Start from the partial labels when available: they are strongly
  // correlated with the community eigenvector and invariant under
  // node relabeling. Fall back to a parity pattern otherwise.
  std::vector<double> start(m);
  bool any_label = false;
  for (int i = 0; i < m; ++i) {
    start[i] = static_cast<double>(g.ell[i]);
    any_label |= g.ell[i] != 0;
  }
  if (!any_label)
    for (int i = 0; i < m; ++i) start[i] = (i % 2 == 0) ? 1.0 : -1.0;

  EigenPair out =
      power_iterate(m, matvec, std::move(start), tol, max_iter, &first.vector);
  out.iterations += first.iterations;
  if (std::abs(first.value - out.value) < 1e-8)
    throw std::runtime_error("degenerate gap between the top adjacency "
                             "eigenvalues; second eigenvector is not defined");

  // Label-aligned sign: sum over R+ minus sum over R- made nonnegative.
  double aligned = 0.0;
  for (int i = 0; i < m; ++i) aligned += g.ell[i] * out.vector[i];
  if (aligned < 0.0) scale(out.vector, -1.0);
  return out;
}

}  // namespace qsd
