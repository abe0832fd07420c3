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

#include "stvnd/paths.hpp"

#include <algorithm>
#include <queue>

namespace stvnd {

std::vector<NodeId> PathResult::path_to(NodeId target) const {
  if (!reached(target)) {
    throw InputError("path_to: node " + std::to_string(target) + " not reached from " +
                     std::to_string(source));
  }
  std::vector<NodeId> rev;
  for (NodeId v = target; v != source; v = pred[v]) rev.push_back(v);
  rev.push_back(source);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<Edge> PathResult::path_edges_to(NodeId target) const {
  std::vector<NodeId> nodes = path_to(target);
  std::vector<Edge> out;
  out.reserve(nodes.size() > 0 ? nodes.size() - 1 : 0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    out.push_back(make_edge(nodes[i - 1], nodes[i], dist[nodes[i]] - dist[nodes[i - 1]]));
  }
  return out;
}

namespace {

struct QueueItem {
  Cost dist;
  NodeId node;
  // Min-heap: larger dist sinks; dist ties broken toward smaller node id so
  // settle order, and with it the pred tree, is deterministic.
  bool operator<(const QueueItem& o) const {
    return dist != o.dist ? dist > o.dist : node > o.node;
  }
};

PathResult run_dijkstra(const Graph& graph, NodeId source,
                        const std::vector<NodeId>* stop_targets) {
  if (!graph.alive(source)) {
    throw InputError("dijkstra: source " + std::to_string(source) + " is not live");
  }
  PathResult r;
  r.source = source;
  r.dist.assign(graph.capacity(), kInfCost);
  r.pred.assign(graph.capacity(), -1);
  std::vector<char> settled(graph.capacity(), 0);

  int pending = 0;
  std::vector<char> is_target;
  if (stop_targets) {
    is_target.assign(graph.capacity(), 0);
    for (NodeId t : *stop_targets) {
      if (t >= 0 && t < graph.capacity() && !is_target[t]) {
        is_target[t] = 1;
        ++pending;
      }
    }
  }

  std::priority_queue<QueueItem> pq;
  r.dist[source] = 0;
  r.pred[source] = source;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    if (stop_targets && is_target[v] && --pending == 0) break;
    for (const AdjEntry& e : graph.neighbors(v)) {
      Cost nd = d + e.cost;
      if (nd < r.dist[e.to] ||
          (nd == r.dist[e.to] && !settled[e.to] && v < r.pred[e.to])) {
        r.dist[e.to] = nd;
        r.pred[e.to] = v;
        pq.push({nd, e.to});
      }
    }
  }
  return r;
}

} // namespace

PathResult dijkstra(const Graph& graph, NodeId source) {
  return run_dijkstra(graph, source, nullptr);
}

PathResult dijkstra_to_targets(const Graph& graph, NodeId source,
                               const std::vector<NodeId>& targets) {
  return run_dijkstra(graph, source, &targets);
}

} // namespace stvnd
