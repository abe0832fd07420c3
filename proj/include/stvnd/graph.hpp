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

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace stvnd {

using NodeId = int;
using Cost = std::int64_t;

/// Sentinel for "unreachable"/"absent". Small enough that sums of a few
/// sentinels never overflow Cost.
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max() / 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AdjEntry {
  NodeId to;
  Cost cost;
};

/// Undirected weighted edge, stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;
  Cost cost;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b, Cost cost) {
  return a < b ? Edge{a, b, cost} : Edge{b, a, cost};
}

/// Orders edges by endpoints only; cost is payload.
struct EdgeEndpointLess {
  bool operator()(const Edge& a, const Edge& b) const {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

/// Simple undirected graph over dense node ids [0, capacity).
///
/// Node removal is tombstoning: the id stays valid, the node just stops
/// being live. Reduction logs rely on ids never being recycled.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count);

  /// Graph whose live ids are 1..n, with slot 0 permanently unused.
  /// SteinLib files and the test fixtures are 1-based.
  static Graph one_based(int n);

  int capacity() const { return static_cast<int>(adj_.size()); }
  bool alive(NodeId v) const { return v >= 0 && v < capacity() && alive_[v]; }
  int live_node_count() const { return live_nodes_; }
  int live_edge_count() const { return live_edges_; }

  int degree(NodeId v) const;
  std::span<const AdjEntry> neighbors(NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const;
  std::optional<Cost> edge_cost(NodeId u, NodeId v) const;

  /// Rejects self-loops, duplicate pairs, dead endpoints and negative costs.
  void add_edge(NodeId u, NodeId v, Cost cost);
  void remove_edge(NodeId u, NodeId v);
  /// Tombstones v and drops its incident edges.
  void remove_node(NodeId v);

  std::vector<NodeId> live_nodes() const;
  /// Canonical (u < v) edges sorted by (u, v).
  std::vector<Edge> live_edges() const;

 private:
  void check_live(NodeId v, const char* what) const;

  std::vector<std::vector<AdjEntry>> adj_;
  std::vector<char> alive_;
  int live_nodes_ = 0;
  int live_edges_ = 0;
};

/// A Steiner tree problem: a graph plus the terminals every solution must span.
struct Instance {
  Graph graph;
  std::vector<NodeId> terminals;   // sorted, unique
  std::vector<char> terminal_mask; // indexed by node id

  static Instance make(Graph graph, std::vector<NodeId> terminals);

  bool is_terminal(NodeId v) const {
    return v >= 0 && v < static_cast<int>(terminal_mask.size()) && terminal_mask[v];
  }
  int terminal_count() const { return static_cast<int>(terminals.size()); }
};

/// A candidate tree: canonical edge list, derived node set, cached cost.
/// Single live nodes without edges are representable (|T| = 1 solutions).
struct Solution {
  std::vector<Edge> edges; // canonical per edge, sorted by (u, v)
  std::vector<NodeId> nodes; // sorted
  Cost cost = 0;

  static Solution from_edges(std::vector<Edge> edges);
  static Solution from_edges_and_nodes(std::vector<Edge> edges,
                                       std::vector<NodeId> extra_nodes);
  static Solution single_node(NodeId v);

  bool contains_node(NodeId v) const;
  bool contains_edge(NodeId u, NodeId v) const;
  bool empty() const { return nodes.empty(); }

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Components of the live subgraph, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& graph);

/// Components of an explicit subgraph (isolated nodes form singletons).
std::vector<std::vector<NodeId>> connected_components(std::span<const Edge> edges,
                                                      std::span<const NodeId> nodes);

} // namespace stvnd
