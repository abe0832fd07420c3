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

#include "stvnd/reduce.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "stvnd/mst.hpp"

namespace stvnd {

namespace {

Cost saturating_add(Cost a, Cost b) {
  Cost s = a + b;
  return s >= kInfCost ? kInfCost : s;
}

} // namespace

ReductionEvent ReductionEvent::node_removal(NodeId node, std::string test,
                                            std::optional<Cost> bound) {
  ReductionEvent e;
  e.kind = ReductionKind::kNodeRemoval;
  e.node = node;
  e.test = std::move(test);
  e.bound = bound;
  return e;
}

ReductionEvent ReductionEvent::edge_removal(NodeId u, NodeId v, std::string test,
                                            std::optional<Cost> bound) {
  ReductionEvent e;
  e.kind = ReductionKind::kEdgeRemoval;
  if (u > v) std::swap(u, v);
  e.u = u;
  e.v = v;
  e.test = std::move(test);
  e.bound = bound;
  return e;
}

int ReductionLog::node_removals() const {
  int n = 0;
  for (const auto& e : events) n += e.kind == ReductionKind::kNodeRemoval;
  return n;
}

int ReductionLog::edge_removals() const {
  int n = 0;
  for (const auto& e : events) n += e.kind == ReductionKind::kEdgeRemoval;
  return n;
}

void ReductionLog::append(std::vector<ReductionEvent> more) {
  for (auto& e : more) events.push_back(std::move(e));
}

std::string ReductionLog::to_csv() const {
  std::ostringstream out;
  out << "kind,subject,test,bound\n";
  for (const auto& e : events) {
    if (e.kind == ReductionKind::kNodeRemoval) {
      out << "node," << e.node;
    } else {
      out << "edge," << e.u << "-" << e.v;
    }
    out << "," << e.test << ",";
    if (e.bound) out << *e.bound;
    out << "\n";
  }
  return out.str();
}

void apply_events(Graph& graph, const std::vector<ReductionEvent>& events) {
  for (const auto& e : events) {
    if (e.kind == ReductionKind::kNodeRemoval) {
      graph.remove_node(e.node);
    } else {
      graph.remove_edge(e.u, e.v);
    }
  }
}

std::vector<ReductionEvent> reduce_degree(const Instance& instance) {
  const Graph& g = instance.graph;
  std::vector<int> deg(g.capacity(), 0);
  std::vector<char> alive(g.capacity(), 0);
  for (NodeId v : g.live_nodes()) {
    alive[v] = 1;
    deg[v] = g.degree(v);
  }
  std::set<NodeId> worklist;
  for (NodeId v : g.live_nodes()) {
    if (!instance.is_terminal(v) && deg[v] <= 1) worklist.insert(v);
  }
  std::vector<ReductionEvent> out;
  while (!worklist.empty()) {
    NodeId v = *worklist.begin();
    worklist.erase(worklist.begin());
    if (!alive[v] || deg[v] > 1 || instance.is_terminal(v)) continue;
    alive[v] = 0;
    out.push_back(ReductionEvent::node_removal(v, "degree"));
    for (const AdjEntry& e : g.neighbors(v)) {
      if (!alive[e.to]) continue;
      if (--deg[e.to] <= 1 && !instance.is_terminal(e.to)) worklist.insert(e.to);
    }
  }
  return out;
}

int TmstData::terminal_index(NodeId t) const {
  auto it = std::lower_bound(terminals.begin(), terminals.end(), t);
  if (it == terminals.end() || *it != t) {
    throw InputError("tmst: node " + std::to_string(t) + " is not a terminal");
  }
  return static_cast<int>(it - terminals.begin());
}

const PathResult& TmstData::paths_from(NodeId t) const {
  return terminal_paths[terminal_index(t)];
}

Cost TmstData::pair_bottleneck(NodeId t1, NodeId t2) const {
  return bottleneck[terminal_index(t1)][terminal_index(t2)];
}

TmstData build_tmst(const Instance& instance) {
  TmstData out;
  out.terminals = instance.terminals;
  int nt = static_cast<int>(out.terminals.size());
  out.terminal_paths.reserve(nt);
  for (NodeId t : out.terminals) {
    out.terminal_paths.push_back(dijkstra(instance.graph, t));
  }

  std::vector<Edge> dist_edges;
  dist_edges.reserve(static_cast<std::size_t>(nt) * (nt - 1) / 2);
  for (int a = 0; a < nt; ++a) {
    for (int b = a + 1; b < nt; ++b) {
      Cost d = out.terminal_paths[a].dist[out.terminals[b]];
      if (d >= kInfCost) {
        throw InfeasibleError("terminals " + std::to_string(out.terminals[a]) +
                              " and " + std::to_string(out.terminals[b]) +
                              " are disconnected");
      }
      dist_edges.push_back({out.terminals[a], out.terminals[b], d});
    }
  }
  MstResult mst = kruskal(dist_edges, out.terminals);

  out.total_cost = mst.cost;
  for (const Edge& e : mst.edges) {
    TmstEdge te;
    te.t1 = e.u;
    te.t2 = e.v;
    te.dist = e.cost;
    te.path = out.terminal_paths[out.terminal_index(e.u)].path_to(e.v);
    out.max_edge_cost = std::max(out.max_edge_cost, e.cost);
    out.edges.push_back(std::move(te));
  }

  // Pair bottlenecks: one DFS over the TMST per root terminal.
  std::vector<std::vector<std::pair<int, Cost>>> adj(nt);
  for (const TmstEdge& te : out.edges) {
    int a = out.terminal_index(te.t1);
    int b = out.terminal_index(te.t2);
    adj[a].push_back({b, te.dist});
    adj[b].push_back({a, te.dist});
  }
  out.bottleneck.assign(nt, std::vector<Cost>(nt, 0));
  for (int root = 0; root < nt; ++root) {
    std::vector<char> seen(nt, 0);
    std::vector<int> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (auto [b, c] : adj[a]) {
        if (seen[b]) continue;
        seen[b] = 1;
        out.bottleneck[root][b] = std::max(out.bottleneck[root][a], c);
        stack.push_back(b);
      }
    }
  }
  return out;
}

std::vector<ReductionEvent> reduce_triangle(const Instance& instance,
                                            const TmstData& tmst) {
  std::vector<ReductionEvent> out;
  if (tmst.edges.empty()) return out;
  for (const Edge& e : instance.graph.live_edges()) {
    if (e.cost > tmst.max_edge_cost) {
      out.push_back(ReductionEvent::edge_removal(e.u, e.v, "triangle"));
    }
  }
  return out;
}

SdContext make_sd_context(const Instance& instance, int k) {
  SdContext ctx;
  ctx.tmst = build_tmst(instance);
  ctx.k = k;
  int nt = static_cast<int>(ctx.tmst.terminals.size());
  int cap = instance.graph.capacity();
  ctx.nearest.assign(cap, {});
  std::vector<std::pair<Cost, int>> order;
  for (NodeId v : instance.graph.live_nodes()) {
    order.clear();
    for (int ti = 0; ti < nt; ++ti) {
      Cost d = ctx.tmst.terminal_paths[ti].dist[v];
      if (d < kInfCost) order.push_back({d, ti});
    }
    std::sort(order.begin(), order.end(), [&](auto a, auto b) {
      if (a.first != b.first) return a.first < b.first;
      return ctx.tmst.terminals[a.second] < ctx.tmst.terminals[b.second];
    });
    if (static_cast<int>(order.size()) > k) order.resize(k);
    for (auto [d, ti] : order) ctx.nearest[v].push_back(ti);
  }
  return ctx;
}

namespace {

/// Best special-path value through the candidate terminal pairs; excludes
/// the direct d(i, j) term.
Cost special_path_bound(const SdContext& ctx, NodeId i, NodeId j) {
  Cost best = kInfCost;
  for (int ti : ctx.nearest[i]) {
    Cost leg_i = ctx.tmst.terminal_paths[ti].dist[i];
    if (leg_i >= best) continue;
    for (int tj : ctx.nearest[j]) {
      Cost leg_j = ctx.tmst.terminal_paths[tj].dist[j];
      Cost mid = ti == tj ? 0 : ctx.tmst.bottleneck[ti][tj];
      Cost value = std::max({leg_i, mid, leg_j});
      best = std::min(best, value);
    }
  }
  return best;
}

} // namespace

Cost special_distance(const SdContext& ctx, const Instance& instance, NodeId i,
                      NodeId j) {
  PathResult pr = dijkstra_to_targets(instance.graph, i, {j});
  Cost direct = pr.dist[j];
  return std::min(direct, special_path_bound(ctx, i, j));
}

std::vector<ReductionEvent> reduce_special_distance(const Instance& instance, int k) {
  std::vector<ReductionEvent> out;
  if (instance.terminal_count() < 1) return out;
  SdContext ctx = make_sd_context(instance, k);

  // One targeted dijkstra per node gives exact d(u, v) for all its edges.
  std::vector<Edge> edges = instance.graph.live_edges();
  NodeId current = -1;
  PathResult pr;
  for (const Edge& e : edges) {
    if (e.u != current) {
      std::vector<NodeId> targets;
      for (const AdjEntry& a : instance.graph.neighbors(e.u)) targets.push_back(a.to);
      pr = dijkstra_to_targets(instance.graph, e.u, targets);
      current = e.u;
    }
    Cost s_hat = std::min(pr.dist[e.v], special_path_bound(ctx, e.u, e.v));
    if (e.cost > s_hat) {
      out.push_back(ReductionEvent::edge_removal(e.u, e.v, "special_distance"));
    }
  }
  return out;
}

std::vector<ReductionEvent> reduce_reachability(const Instance& instance, Cost bound) {
  std::vector<PathResult> from_terminals;
  from_terminals.reserve(instance.terminals.size());
  for (NodeId t : instance.terminals) {
    from_terminals.push_back(dijkstra(instance.graph, t));
  }
  std::vector<ReductionEvent> out;
  for (NodeId v : instance.graph.live_nodes()) {
    if (instance.is_terminal(v)) continue;
    Cost worst = 0;
    for (const PathResult& pr : from_terminals) {
      worst = std::max(worst, pr.dist[v]);
    }
    if (worst > bound) {
      out.push_back(ReductionEvent::node_removal(v, "reachability", bound));
    }
  }
  return out;
}

namespace {

VoronoiPartition voronoi_from_paths(const Instance& instance,
                                    const std::vector<PathResult>& paths) {
  const std::vector<NodeId>& terms = instance.terminals;
  int cap = instance.graph.capacity();
  VoronoiPartition part;
  part.base.assign(cap, -1);
  part.dist_base.assign(cap, kInfCost);
  part.second.assign(cap, -1);
  part.dist_second.assign(cap, kInfCost);

  for (NodeId v : instance.graph.live_nodes()) {
    // Two smallest (distance, terminal id) pairs; scan keeps the tie rule.
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
      Cost d = paths[ti].dist[v];
      if (d >= kInfCost) continue;
      if (d < part.dist_base[v]) {
        part.second[v] = part.base[v];
        part.dist_second[v] = part.dist_base[v];
        part.base[v] = terms[ti];
        part.dist_base[v] = d;
      } else if (d < part.dist_second[v]) {
        part.second[v] = terms[ti];
        part.dist_second[v] = d;
      }
    }
  }

  part.region_terminal = terms;
  part.radius.assign(terms.size(), std::nullopt);
  for (std::size_t ti = 0; ti < terms.size(); ++ti) {
    Cost r = kInfCost;
    bool has_outside = false;
    for (NodeId v : instance.graph.live_nodes()) {
      if (part.base[v] == terms[ti]) continue;
      has_outside = true;
      r = std::min(r, paths[ti].dist[v]);
    }
    if (has_outside) {
      part.radius[ti] = r;
      part.radii_ascending.push_back(r);
    }
  }
  std::sort(part.radii_ascending.begin(), part.radii_ascending.end());
  return part;
}

} // namespace

Cost VoronoiPartition::smallest_radii_sum(int count) const {
  Cost sum = 0;
  int n = std::min<int>(count, static_cast<int>(radii_ascending.size()));
  for (int i = 0; i < n; ++i) sum = saturating_add(sum, radii_ascending[i]);
  return sum;
}

VoronoiPartition voronoi_partition(const Instance& instance) {
  std::vector<PathResult> paths;
  paths.reserve(instance.terminals.size());
  for (NodeId t : instance.terminals) paths.push_back(dijkstra(instance.graph, t));
  return voronoi_from_paths(instance, paths);
}

std::vector<ReductionEvent> reduce_voronoi(const Instance& instance, Cost bound) {
  std::vector<ReductionEvent> out;
  if (instance.terminal_count() < 2) return out;
  VoronoiPartition part = voronoi_partition(instance);
  int r = static_cast<int>(part.radii_ascending.size());
  Cost radius_sum = r >= 2 ? part.smallest_radii_sum(r - 2) : 0;
  for (NodeId v : instance.graph.live_nodes()) {
    if (instance.is_terminal(v)) continue;
    Cost lower = saturating_add(saturating_add(part.dist_base[v], part.dist_second[v]),
                                radius_sum);
    if (lower > bound) {
      out.push_back(ReductionEvent::node_removal(v, "voronoi", bound));
    }
  }
  return out;
}

ReduceResult reduce_fixpoint(const Instance& instance, std::optional<Cost> bound,
                             int sd_cap) {
  ReduceResult result{instance, {}};
  Instance& work = result.instance;
  for (;;) {
    std::size_t before = result.log.events.size();

    std::vector<ReductionEvent> ev = reduce_degree(work);
    apply_events(work.graph, ev);
    result.log.append(std::move(ev));

    if (work.terminal_count() >= 2) {
      TmstData tmst = build_tmst(work);
      ev = reduce_triangle(work, tmst);
      apply_events(work.graph, ev);
      result.log.append(std::move(ev));
    }

    ev = reduce_special_distance(work, sd_cap);
    apply_events(work.graph, ev);
    result.log.append(std::move(ev));

    if (bound) {
      ev = reduce_reachability(work, *bound);
      apply_events(work.graph, ev);
      result.log.append(std::move(ev));

      ev = reduce_voronoi(work, *bound);
      apply_events(work.graph, ev);
      result.log.append(std::move(ev));
    }

    if (result.log.events.size() == before) break;
  }
  // A final connectivity check; build_tmst throws on disconnected terminals.
  if (work.terminal_count() >= 2) build_tmst(work);
  return result;
}

} // namespace stvnd
