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

#include "stvnd/exact.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "stvnd/mst.hpp"
#include "stvnd/tree_ops.hpp"

namespace stvnd {

namespace {

// How a dp[mask][v] value was obtained, for tree recovery.
struct Link {
  enum Kind : unsigned char { kNone, kGrow, kMerge } kind = kNone;
  NodeId grow_from = -1; // kGrow: edge (grow_from, v)
  int merge_sub = 0;     // kMerge: submask joined with its complement at v
};

struct HeapItem {
  Cost cost;
  NodeId node;
  bool operator<(const HeapItem& o) const {
    return cost != o.cost ? cost > o.cost : node > o.node;
  }
};

} // namespace

ExactResult exact_steiner(const Instance& instance) {
  int nt = instance.terminal_count();
  if (nt > kExactTerminalLimit) {
    throw InputError("exact_steiner: " + std::to_string(nt) +
                     " terminals exceeds the limit of " +
                     std::to_string(kExactTerminalLimit));
  }
  if (nt == 1) {
    ExactResult r;
    r.solution = Solution::single_node(instance.terminals[0]);
    return r;
  }

  const Graph& g = instance.graph;
  int cap = g.capacity();
  int full = (1 << nt) - 1;
  std::vector<std::vector<Cost>> dp(full + 1, std::vector<Cost>(cap, kInfCost));
  std::vector<std::vector<Link>> link(full + 1, std::vector<Link>(cap));

  for (int i = 0; i < nt; ++i) dp[1 << i][instance.terminals[i]] = 0;

  for (int mask = 1; mask <= full; ++mask) {
    auto& cur = dp[mask];
    // Merge two submask trees meeting at v.
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      int rest = mask ^ sub;
      if (sub < rest) continue; // each unordered pair once
      const auto& a = dp[sub];
      const auto& b = dp[rest];
      for (NodeId v = 0; v < cap; ++v) {
        if (a[v] >= kInfCost || b[v] >= kInfCost) continue;
        Cost c = a[v] + b[v];
        if (c < cur[v]) {
          cur[v] = c;
          link[mask][v] = {Link::kMerge, -1, sub};
        }
      }
    }
    // Grow along edges: one multi-source shortest-path pass.
    std::priority_queue<HeapItem> pq;
    for (NodeId v = 0; v < cap; ++v) {
      if (cur[v] < kInfCost) pq.push({cur[v], v});
    }
    while (!pq.empty()) {
      auto [c, v] = pq.top();
      pq.pop();
      if (c > cur[v]) continue;
      for (const AdjEntry& e : g.neighbors(v)) {
        Cost nc = c + e.cost;
        if (nc < cur[e.to]) {
          cur[e.to] = nc;
          link[mask][e.to] = {Link::kGrow, v, 0};
          pq.push({nc, e.to});
        }
      }
    }
  }

  NodeId root = instance.terminals[0];
  if (dp[full][root] >= kInfCost) {
    throw InfeasibleError("exact_steiner: terminals are disconnected");
  }

  // Walk the links back into an edge set, then clean it into a tree.
  std::set<std::pair<NodeId, NodeId>> used;
  std::vector<std::pair<int, NodeId>> stack{{full, root}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    const Link& l = link[mask][v];
    switch (l.kind) {
      case Link::kNone:
        break; // base case: singleton mask at its own terminal
      case Link::kGrow: {
        NodeId u = l.grow_from;
        used.insert({std::min(u, v), std::max(u, v)});
        stack.push_back({mask, u});
        break;
      }
      case Link::kMerge:
        stack.push_back({l.merge_sub, v});
        stack.push_back({mask ^ l.merge_sub, v});
        break;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(used.size());
  for (auto [u, v] : used) {
    edges.push_back({u, v, *g.edge_cost(u, v)});
  }
  // The recovered union realizes the dp cost; an MST plus leaf pruning turns
  // it into a clean tree without ever increasing the cost.
  MstResult mst = kruskal(edges, instance.terminals);
  Solution sol = prune_degree_one(Solution::from_edges(std::move(mst.edges)), instance);

  ExactResult r;
  r.cost = dp[full][root];
  r.solution = std::move(sol);
  if (r.solution.cost != r.cost) {
    throw std::logic_error("exact_steiner: recovered tree cost " +
                           std::to_string(r.solution.cost) + " != dp optimum " +
                           std::to_string(r.cost));
  }
  return r;
}

} // namespace stvnd
