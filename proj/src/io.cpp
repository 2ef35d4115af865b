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

#include "qsdcluster/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qsd {
namespace {

[[noreturn]] void parse_error(const std::string& path, int line,
                              const std::string& what) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

std::vector<std::pair<int, int>> read_edges(const std::string& path,
                                            LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge file: " + path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u >> v)) parse_error(path, lineno, "expected two node ids");
    std::string rest;
    if (ss >> rest) parse_error(path, lineno, "trailing content: " + rest);
    if (u < 0 || v < 0) parse_error(path, lineno, "negative node id");
    if (u == v) {
      if (stats) ++stats->self_loops_dropped;
      continue;
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return edges;
}

std::vector<int> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open labels file: " + path);
  std::vector<int> labels;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string token;
    ss >> token;
    if (token == "+1" || token == "1")
      labels.push_back(1);
    else if (token == "-1")
      labels.push_back(-1);
    else
      parse_error(path, lineno, "expected +1 or -1, got '" + token + "'");
  }
  return labels;
}

LabeledGraph assemble(const std::vector<std::pair<int, int>>& edges,
                      std::vector<int> labels, LoadStats* stats) {
  const int n = static_cast<int>(labels.size());
  int max_id = -1;
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::runtime_error("edge references unknown node id " +
                               std::to_string(std::max(u, v)) +
                               " (labels file has only " + std::to_string(n) +
                               " lines)");
    max_id = std::max({max_id, u, v});
  }
  if (!edges.empty() && max_id + 1 != n)
    throw std::runtime_error("label count " + std::to_string(n) +
                             " does not match node count " +
                             std::to_string(max_id + 1) +
                             " implied by the edge list");
  LabeledGraph g;
  g.n = n;
  g.adj.resize(n);
  g.sigma = std::move(labels);
  g.ell.assign(n, 0);
  for (const auto& [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& row : g.adj) {
    std::sort(row.begin(), row.end());
    const auto last = std::unique(row.begin(), row.end());
    if (stats)
      stats->duplicate_edges_dropped +=
          static_cast<int>(row.end() - last);  // counts both directions
    row.erase(last, row.end());
  }
  return g;
}

}  // namespace

LabeledGraph load_edge_list(const std::string& edges_path,
                            const std::string& labels_path, double delta,
                            std::uint64_t seed, LoadStats* stats) {
  if (delta < 0.0 || delta >= 1.0)
    throw std::invalid_argument("delta must lie in [0,1)");
  LabeledGraph g = assemble(read_edges(edges_path, stats),
                            read_labels(labels_path), stats);

  // Revealed nodes are sampled inside the giant component only, so
  // every revealed node is usable as an absorbing state.
  const ComponentView giant = giant_component(g);
  std::mt19937_64 rng(seed);
  for (int side : {1, -1}) {
    std::vector<int> candidates;
    for (int u : giant.members)
      if (g.sigma[u] == side) candidates.push_back(u);
    const int r = static_cast<int>(std::floor(delta * candidates.size()));
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (int i = 0; i < r; ++i) g.ell[candidates[i]] = side;
  }
  return g;
}

LabeledGraph load_graph(const std::string& edges_path,
                        const std::string& labels_path,
                        const std::string& revealed_path, LoadStats* stats) {
  LabeledGraph g = assemble(read_edges(edges_path, stats),
                            read_labels(labels_path), stats);
  std::ifstream in(revealed_path);
  if (!in) throw std::runtime_error("cannot open revealed file: " + revealed_path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long u;
    if (!(ss >> u)) parse_error(revealed_path, lineno, "expected a node id");
    if (u < 0 || u >= g.n) parse_error(revealed_path, lineno, "node id out of range");
    g.ell[static_cast<int>(u)] = g.sigma[static_cast<int>(u)];
  }
  return g;
}

void save_graph(const LabeledGraph& g, const std::string& edges_path,
                const std::string& labels_path,
                const std::string& revealed_path) {
  {
    std::ofstream out(edges_path);
    if (!out) throw std::runtime_error("cannot write " + edges_path);
    for (int u = 0; u < g.n; ++u)
      for (int v : g.adj[u])
        if (u < v) out << u << ' ' << v << '\n';
  }
  {
    std::ofstream out(labels_path);
    if (!out) throw std::runtime_error("cannot write " + labels_path);
    for (int v = 0; v < g.n; ++v)
      out << (g.sigma[v] >= 0 ? "+1" : "-1") << '\n';
  }
  {
    std::ofstream out(revealed_path);
    if (!out) throw std::runtime_error("cannot write " + revealed_path);
    for (int v = 0; v < g.n; ++v)
      if (g.ell[v] != 0) out << v << '\n';
  }
}

}  // namespace qsd
