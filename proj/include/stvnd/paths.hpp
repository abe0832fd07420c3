// Copyright 2026 The stvnd authors
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

#pragma once

#include <vector>

#include "stvnd/graph.hpp"

namespace stvnd {

/// Shortest-path tree from one source. dist[v] == kInfCost means unreachable;
/// pred[source] == source, pred of unreachable nodes == -1.
struct PathResult {
  NodeId source = -1;
  std::vector<Cost> dist;
  std::vector<NodeId> pred;

  bool reached(NodeId v) const {
    return v >= 0 && v < static_cast<int>(dist.size()) && dist[v] < kInfCost;
  }
  /// Node sequence source..target. Target must be reached.
  std::vector<NodeId> path_to(NodeId target) const;
  /// Canonical edges of that path, costed from the tree distances.
  std::vector<Edge> path_edges_to(NodeId target) const;
};

/// Dijkstra over live nodes. Ties broken toward the smaller predecessor id,
/// so equal-cost graphs always yield the same tree.
PathResult dijkstra(const Graph& graph, NodeId source);

/// Same, but stops once every node in `targets` is settled. dist/pred for
/// unsettled nodes are still usable lower bounds only for settled ones;
/// callers should only read targets.
PathResult dijkstra_to_targets(const Graph& graph, NodeId source,
                               const std::vector<NodeId>& targets);

} // namespace stvnd
