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

#include "stvnd/construct.hpp"

#include <algorithm>
#include <set>

#include "stvnd/mst.hpp"
#include "stvnd/tree_ops.hpp"

namespace stvnd {

ExpandedTmst expand_tmst(const Instance& instance, PruneVariant variant) {
  ExpandedTmst out;
  out.tmst = build_tmst(instance);

  std::set<NodeId> node_set(instance.terminals.begin(), instance.terminals.end());
  std::set<Edge, EdgeEndpointLess> edge_set;
  for (const TmstEdge& te : out.tmst.edges) {
    for (std::size_t i = 0; i + 1 < te.path.size(); ++i) {
      NodeId a = te.path[i];
      NodeId b = te.path[i + 1];
      node_set.insert(a);
      node_set.insert(b);
      edge_set.insert(make_edge(a, b, *instance.graph.edge_cost(a, b)));
    }
  }
  out.nodes.assign(node_set.begin(), node_set.end());

  if (variant == PruneVariant::kEdge) {
    out.edges.assign(edge_set.begin(), edge_set.end());
  } else {
    // Induced subgraph on the expansion vertices.
    for (NodeId v : out.nodes) {
      for (const AdjEntry& e : instance.graph.neighbors(v)) {
        if (v < e.to && node_set.count(e.to)) {
          out.edges.push_back({v, e.to, e.cost});
        }
      }
    }
    std::sort(out.edges.begin(), out.edges.end(), EdgeEndpointLess{});
  }
  return out;
}

Solution construct(const Instance& instance, PruneVariant variant) {
  if (instance.terminal_count() == 1) {
    return Solution::single_node(instance.terminals[0]);
  }
  ExpandedTmst ex = expand_tmst(instance, variant);
  MstResult mst = kruskal(ex.edges, ex.nodes);
  Solution tree = Solution::from_edges(std::move(mst.edges));
  return prune_degree_one(tree, instance);
}

InitialResult initial_solution(const Instance& instance) {
  Solution by_edge = construct(instance, PruneVariant::kEdge);
  Solution by_vertex = construct(instance, PruneVariant::kVertex);
  if (by_vertex.cost < by_edge.cost) {
    return {std::move(by_vertex), PruneVariant::kVertex};
  }
  return {std::move(by_edge), PruneVariant::kEdge};
}

} // namespace stvnd
