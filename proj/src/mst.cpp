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

#include "stvnd/mst.hpp"

#include <algorithm>
#include <map>

namespace stvnd {

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  return true;
}

MstResult kruskal(std::span<const Edge> edges, std::span<const NodeId> nodes) {
  // Compact ids: node set may be sparse.
  std::map<NodeId, int> index;
  for (NodeId v : nodes) index.emplace(v, 0);
  for (const Edge& e : edges) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  int n = 0;
  for (auto& [v, i] : index) i = n++;

  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (Edge& e : sorted) e = make_edge(e.u, e.v, e.cost);
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  MstResult r;
  r.components = n;
  UnionFind uf(n);
  for (const Edge& e : sorted) {
    if (uf.unite(index[e.u], index[e.v])) {
      r.edges.push_back(e);
      r.cost += e.cost;
      --r.components;
    }
  }
  std::sort(r.edges.begin(), r.edges.end(), EdgeEndpointLess{});
  return r;
}

MstResult minimum_spanning_tree(const Graph& graph) {
  std::vector<NodeId> nodes = graph.live_nodes();
  std::vector<Edge> edges = graph.live_edges();
  return kruskal(edges, nodes);
}

} // namespace stvnd
