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

#ifndef QSDCLUSTER_IO_HPP
#define QSDCLUSTER_IO_HPP

#include <cstdint>
#include <string>

#include "qsdcluster/graph.hpp"

namespace qsd {

struct LoadStats {
  int self_loops_dropped = 0;
  int duplicate_edges_dropped = 0;
};

/// Reads an edge list ("u v" per line, 0-based ids) and a labels file
/// (one of +1/-1 per line, line i = node i), then samples revealed
/// sets of floor(delta * |community inside the giant component|) per
/// community, uniformly with the given seed. Only nodes in the giant
/// component are eligible, so every revealed node can serve as an
/// absorbing state. Self-loops and duplicate edges are dropped and
/// counted in stats.
LabeledGraph load_edge_list(const std::string& edges_path,
                            const std::string& labels_path, double delta,
                            std::uint64_t seed, LoadStats* stats = nullptr);

/// Reads a graph with an explicit revealed-ids file (one node id per
/// line) instead of sampling.
LabeledGraph load_graph(const std::string& edges_path,
                        const std::string& labels_path,
                        const std::string& revealed_path,
                        LoadStats* stats = nullptr);

/// Writes the edge-list / labels / revealed-ids triple. Each edge is
/// written once as "u v" with u < v.
void save_graph(const LabeledGraph& g, const std::string& edges_path,
                const std::string& labels_path,
                const std::string& revealed_path);

}  // namespace qsd

#endif  // QSDCLUSTER_IO_HPP
