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

#include "stvnd/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace stvnd {

Graph::Graph(int node_count) {
  if (node_count < 0) throw InputError("graph: negative node count");
  adj_.resize(node_count);
  alive_.assign(node_count, 1);
  live_nodes_ = node_count;
}

Graph Graph::one_based(int n) {
  Graph g(n + 1);
  if (n >= 0) g.remove_node(0);
  return g;
}

void Graph::check_live(NodeId v, const char* what) const {
  if (!alive(v)) {
    throw InputError(std::string("graph: ") + what + " on dead or out-of-range node " +
                     std::to_string(v));
  }
}

int Graph::degree(NodeId v) const {
  check_live(v, "degree");
  return static_cast<int>(adj_[v].size());
}

std::span<const AdjEntry> Graph::neighbors(NodeId v) const {
  check_live(v, "neighbors");
  return adj_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  return edge_cost(u, v).has_value();
}

std::optional<Cost> Graph::edge_cost(NodeId u, NodeId v) const {
  if (!alive(u) || !alive(v)) return std::nullopt;
  // Scan the smaller adjacency list.
  const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  NodeId other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const AdjEntry& e : list) {
    if (e.to == other) return e.cost;
  }
  return std::nullopt;
}

void Graph::add_edge(NodeId u, NodeId v, Cost cost) {
  check_live(u, "add_edge");
  check_live(v, "add_edge");
  if (u == v) throw InputError("graph: self-loop on node " + std::to_string(u));
  if (cost < 0) throw InputError("graph: negative edge cost");
  if (has_edge(u, v)) {
    throw InputError("graph: duplicate edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  }
  adj_[u].push_back({v, cost});
  adj_[v].push_back({u, cost});
  ++live_edges_;
}

void Graph::remove_edge(NodeId u, NodeId v) {
  check_live(u, "remove_edge");
  check_live(v, "remove_edge");
  auto drop = [](std::vector<AdjEntry>& list, NodeId to) {
    auto it = std::find_if(list.begin(), list.end(),
                           [to](const AdjEntry& e) { return e.to == to; });
    if (it == list.end()) return false;
    list.erase(it);
    return true;
  };
  if (!drop(adj_[u], v)) {
    throw InputError("graph: remove_edge on missing edge " + std::to_string(u) + "-" +
                     std::to_string(v));
  }
  drop(adj_[v], u);
  --live_edges_;
}

void Graph::remove_node(NodeId v) {
  check_live(v, "remove_node");
  for (const AdjEntry& e : adj_[v]) {
    auto& list = adj_[e.to];
    auto it = std::find_if(list.begin(), list.end(),
                           [v](const AdjEntry& x) { return x.to == v; });
    list.erase(it);
    --live_edges_;
  }
  adj_[v].clear();
  alive_[v] = 0;
  --live_nodes_;
}

std::vector<NodeId> Graph::live_nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (NodeId v = 0; v < capacity(); ++v) {
    if (alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Graph::live_edges() const {
  std::vector<Edge> out;
  out.reserve(live_edges_);
  for (NodeId u = 0; u < capacity(); ++u) {
    if (!alive_[u]) continue;
    for (const AdjEntry& e : adj_[u]) {
      if (u < e.to) out.push_back({u, e.to, e.cost});
    }
  }
  std::sort(out.begin(), out.end(), EdgeEndpointLess{});
  return out;
}

Instance Instance::make(Graph graph, std::vector<NodeId> terminals) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw InputError("instance: no terminals");
  for (NodeId t : terminals) {
    if (!graph.alive(t)) {
      throw InputError("instance: terminal " + std::to_string(t) +
                       " is not a live node");
    }
  }
  Instance inst;
  inst.terminal_mask.assign(graph.capacity(), 0);
  for (NodeId t : terminals) inst.terminal_mask[t] = 1;
  inst.graph = std::move(graph);
  inst.terminals = std::move(terminals);
  return inst;
}

Solution Solution::from_edges(std::vector<Edge> edges) {
  return from_edges_and_nodes(std::move(edges), {});
}

Solution Solution::from_edges_and_nodes(std::vector<Edge> edges,
                                        std::vector<NodeId> extra_nodes) {
  Solution s;
  for (Edge& e : edges) e = make_edge(e.u, e.v, e.cost);
  std::sort(edges.begin(), edges.end(), EdgeEndpointLess{});
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
      throw InputError("solution: duplicate edge " + std::to_string(edges[i].u) + "-" +
                       std::to_string(edges[i].v));
    }
  }
  std::set<NodeId> nodes(extra_nodes.begin(), extra_nodes.end());
  Cost cost = 0;
  for (const Edge& e : edges) {
    nodes.insert(e.u);
    nodes.insert(e.v);
    cost += e.cost;
  }
  s.edges = std::move(edges);
  s.nodes.assign(nodes.begin(), nodes.end());
  s.cost = cost;
  return s;
}

Solution Solution::single_node(NodeId v) {
  Solution s;
  s.nodes = {v};
  return s;
}

bool Solution::contains_node(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool Solution::contains_edge(NodeId u, NodeId v) const {
  Edge probe = make_edge(u, v, 0);
  auto it = std::lower_bound(edges.begin(), edges.end(), probe, EdgeEndpointLess{});
  return it != edges.end() && it->u == probe.u && it->v == probe.v;
}

namespace {

// Iterative DFS flood fill; recursion would overflow on long paths.
std::vector<std::vector<NodeId>> components_impl(
    const std::vector<NodeId>& nodes,
    const std::function<void(NodeId, std::vector<NodeId>&)>& push_neighbors) {
  std::set<NodeId> unseen(nodes.begin(), nodes.end());
  std::vector<std::vector<NodeId>> out;
  while (!unseen.empty()) {
    NodeId start = *unseen.begin();
    std::vector<NodeId> comp;
    std::vector<NodeId> stack{start};
    unseen.erase(start);
    std::vector<NodeId> buf;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      buf.clear();
      push_neighbors(v, buf);
      for (NodeId w : buf) {
        auto it = unseen.find(w);
        if (it != unseen.end()) {
          unseen.erase(it);
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

} // namespace

std::vector<std::vector<NodeId>> connected_components(const Graph& graph) {
  return components_impl(graph.live_nodes(), [&](NodeId v, std::vector<NodeId>& buf) {
    for (const AdjEntry& e : graph.neighbors(v)) buf.push_back(e.to);
  });
}

std::vector<std::vector<NodeId>> connected_components(std::span<const Edge> edges,
                                                      std::span<const NodeId> nodes) {
  std::map<NodeId, std::vector<NodeId>> adj;
  for (NodeId v : nodes) adj[v];
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<NodeId> all;
  all.reserve(adj.size());
  for (const auto& [v, _] : adj) all.push_back(v);
  return components_impl(all, [&](NodeId v, std::vector<NodeId>& buf) {
    buf = adj[v];
  });
}

} // namespace stvnd
