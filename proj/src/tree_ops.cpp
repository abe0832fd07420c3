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

#include "stvnd/tree_ops.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace stvnd {

std::optional<TreeViolation> validate_tree(const Instance& instance,
                                           const Solution& solution) {
  for (const Edge& e : solution.edges) {
    std::optional<Cost> c = instance.graph.edge_cost(e.u, e.v);
    if (!c) {
      return TreeViolation{TreeViolationKind::kUnknownEdge,
                           "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                               " is not in the graph"};
    }
    if (*c != e.cost) {
      return TreeViolation{TreeViolationKind::kUnknownEdge,
                           "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                               " cost " + std::to_string(e.cost) + " != graph cost " +
                               std::to_string(*c)};
    }
  }

  std::size_t n = solution.nodes.size();
  std::size_t m = solution.edges.size();
  if (n == 0) {
    return TreeViolation{TreeViolationKind::kDisconnected, "solution is empty"};
  }
  if (m + 1 > n) {
    return TreeViolation{TreeViolationKind::kCycle,
                         std::to_string(m) + " edges over " + std::to_string(n) +
                             " nodes"};
  }
  if (m + 1 < n) {
    return TreeViolation{TreeViolationKind::kDisconnected,
                         std::to_string(m) + " edges cannot connect " +
                             std::to_string(n) + " nodes"};
  }
  // |E| == |V| - 1: connected iff acyclic. One union-find pass decides both.
  std::map<NodeId, int> index;
  for (std::size_t i = 0; i < n; ++i) index[solution.nodes[i]] = static_cast<int>(i);
  {
    std::vector<int> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const Edge& e : solution.edges) {
      int a = find(index.at(e.u));
      int b = find(index.at(e.v));
      if (a == b) {
        return TreeViolation{TreeViolationKind::kCycle,
                             "cycle through edge " + std::to_string(e.u) + "-" +
                                 std::to_string(e.v)};
      }
      parent[a] = b;
    }
  }

  for (NodeId t : instance.terminals) {
    if (!solution.contains_node(t)) {
      return TreeViolation{TreeViolationKind::kMissingTerminal,
                           "terminal " + std::to_string(t) + " not covered"};
    }
  }

  Cost sum = 0;
  for (const Edge& e : solution.edges) sum += e.cost;
  if (sum != solution.cost) {
    return TreeViolation{TreeViolationKind::kCostMismatch,
                         "cached cost " + std::to_string(solution.cost) +
                             " != edge sum " + std::to_string(sum)};
  }
  return std::nullopt;
}

Solution prune_degree_one(const Solution& solution, const std::vector<char>& keep) {
  std::map<NodeId, std::vector<Edge>> inc;
  for (NodeId v : solution.nodes) inc[v];
  for (const Edge& e : solution.edges) {
    inc[e.u].push_back(e);
    inc[e.v].push_back(e);
  }
  auto protected_node = [&](NodeId v) {
    return v < static_cast<int>(keep.size()) && keep[v];
  };

  std::vector<NodeId> frontier;
  for (const auto& [v, es] : inc) {
    if (es.size() == 1 && !protected_node(v)) frontier.push_back(v);
  }
  std::set<NodeId> dropped_nodes;
  std::set<std::pair<NodeId, NodeId>> dropped_edges;
  while (!frontier.empty()) {
    NodeId v = frontier.back();
    frontier.pop_back();
    if (dropped_nodes.count(v)) continue;
    // Recompute live degree of v.
    const Edge* last = nullptr;
    int deg = 0;
    for (const Edge& e : inc[v]) {
      if (!dropped_edges.count({e.u, e.v})) {
        ++deg;
        last = &e;
      }
    }
    if (deg != 1 || protected_node(v)) continue;
    dropped_nodes.insert(v);
    dropped_edges.insert({last->u, last->v});
    NodeId other = last->u == v ? last->v : last->u;
    frontier.push_back(other);
  }

  std::vector<Edge> edges;
  for (const Edge& e : solution.edges) {
    if (!dropped_edges.count({e.u, e.v})) edges.push_back(e);
  }
  std::vector<NodeId> extra;
  for (NodeId v : solution.nodes) {
    if (!dropped_nodes.count(v)) extra.push_back(v);
  }
  return Solution::from_edges_and_nodes(std::move(edges), std::move(extra));
}

Solution prune_degree_one(const Solution& solution, const Instance& instance) {
  return prune_degree_one(solution, instance.terminal_mask);
}

} // namespace stvnd
