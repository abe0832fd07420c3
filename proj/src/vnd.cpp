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

#include "stvnd/vnd.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "stvnd/mst.hpp"
#include "stvnd/paths.hpp"
#include "stvnd/tree_ops.hpp"

namespace stvnd {

namespace {

std::map<NodeId, int> solution_degrees(const Solution& s) {
  std::map<NodeId, int> deg;
  for (NodeId v : s.nodes) deg[v] = 0;
  for (const Edge& e : s.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

int effective_walk_cap(const Instance& instance, const VndParams& params) {
  if (params.walk_cap > 0) return params.walk_cap;
  return 4 * std::max(instance.graph.live_node_count(), 1);
}

/// Number of start nodes for an insertion sweep at size b.
int start_budget(const Instance& instance, int b) {
  double ln = std::log(static_cast<double>(
      std::max(instance.graph.live_node_count(), 1)));
  return static_cast<int>(std::ceil(b * ln * ln));
}

bool branch_degree_over_two(const Instance& instance, const VndParams& params,
                            const std::map<NodeId, int>& sol_deg, NodeId v) {
  if (params.graph_degree) {
    return instance.graph.alive(v) && instance.graph.degree(v) > 2;
  }
  auto it = sol_deg.find(v);
  return it != sol_deg.end() && it->second > 2;
}

} // namespace

std::vector<NodeId> random_path(const Instance& instance, const Solution& s,
                                NodeId start, const VndParams& params, Rng& rng) {
  const Graph& g = instance.graph;
  if (!g.alive(start)) return {};

  std::map<NodeId, int> sol_deg = solution_degrees(s);
  // Preferred targets are other branch nodes; when none exist anywhere, any
  // other solution node ends the walk.
  bool any_branch_target = false;
  for (NodeId v : s.nodes) {
    if (v != start && branch_degree_over_two(instance, params, sol_deg, v)) {
      any_branch_target = true;
      break;
    }
  }
  auto is_target = [&](NodeId v) {
    if (v == start || !s.contains_node(v)) return false;
    return any_branch_target
               ? branch_degree_over_two(instance, params, sol_deg, v)
               : true;
  };

  int cap = effective_walk_cap(instance, params);
  std::vector<char> visited(g.capacity(), 0);
  std::vector<NodeId> path;
  std::vector<NodeId> options;
  for (int attempt = 0; attempt < params.walk_attempts; ++attempt) {
    std::fill(visited.begin(), visited.end(), 0);
    path.clear();
    path.push_back(start);
    visited[start] = 1;
    NodeId cur = start;
    for (int step = 0; step < cap; ++step) {
      options.clear();
      for (const AdjEntry& e : g.neighbors(cur)) {
        if (!visited[e.to]) options.push_back(e.to);
      }
      if (options.empty()) break; // dead end; retry
      NodeId next = options[rng.bounded(options.size())];
      visited[next] = 1;
      path.push_back(next);
      if (is_target(next)) return path;
      cur = next;
    }
  }
  return {};
}

Solution insert_path(const Instance& instance, const Solution& s,
                     std::span<const NodeId> path) {
  std::set<Edge, EdgeEndpointLess> edges(s.edges.begin(), s.edges.end());
  for (std::size_t i = 1; i < path.size(); ++i) {
    std::optional<Cost> c = instance.graph.edge_cost(path[i - 1], path[i]);
    if (!c) {
      throw InputError("insert_path: walk edge " + std::to_string(path[i - 1]) +
                       "-" + std::to_string(path[i]) + " is not in the graph");
    }
    edges.insert(make_edge(path[i - 1], path[i], *c));
  }
  std::vector<Edge> all(edges.begin(), edges.end());
  MstResult mst = kruskal(all, s.nodes);
  return prune_degree_one(
      Solution::from_edges_and_nodes(std::move(mst.edges), s.nodes), instance);
}

Solution reconnect(const Instance& instance, std::span<const Edge> piece_edges,
                   std::span<const NodeId> piece_nodes, Rng& rng) {
  const Graph& g = instance.graph;
  std::vector<std::vector<NodeId>> comps =
      connected_components(piece_edges, piece_nodes);
  if (comps.empty()) throw InputError("reconnect: nothing to reconnect");

  std::set<Edge, EdgeEndpointLess> union_edges(piece_edges.begin(),
                                               piece_edges.end());
  std::set<NodeId> union_nodes(piece_nodes.begin(), piece_nodes.end());

  if (comps.size() > 1) {
    int nc = static_cast<int>(comps.size());
    std::vector<int> comp_of(g.capacity(), -1);
    for (int c = 0; c < nc; ++c) {
      for (NodeId v : comps[c]) comp_of[v] = c;
    }

    // Cheapest discovered representative path per component pair.
    struct Candidate {
      Cost cost = kInfCost;
      NodeId rep = -1; // dijkstra source
      NodeId to = -1;  // closest node of the other component
    };
    std::map<std::pair<int, int>, Candidate> best;
    std::vector<PathResult> rep_paths;
    std::vector<NodeId> reps;

    for (int c = 0; c < nc; ++c) {
      // min(3, size) distinct representatives, order driven by the rng.
      std::vector<NodeId> pool = comps[c];
      int take = std::min<int>(3, static_cast<int>(pool.size()));
      for (int i = 0; i < take; ++i) {
        std::size_t j = i + rng.bounded(pool.size() - i);
        std::swap(pool[i], pool[j]);
      }
      for (int i = 0; i < take; ++i) {
        NodeId r = pool[i];
        PathResult pr = dijkstra(g, r);
        for (int other = 0; other < nc; ++other) {
          if (other == c) continue;
          NodeId closest = -1;
          Cost d = kInfCost;
          for (NodeId w : comps[other]) {
            if (pr.dist[w] < d) {
              d = pr.dist[w];
              closest = w;
            }
          }
          if (closest < 0) continue;
          std::pair<int, int> key{std::min(c, other), std::max(c, other)};
          Candidate& cand = best[key];
          if (d < cand.cost || (d == cand.cost && r < cand.rep)) {
            cand = {d, r, closest};
          }
        }
        reps.push_back(r);
        rep_paths.push_back(std::move(pr));
      }
    }

    std::vector<Edge> comp_edges;
    for (const auto& [key, cand] : best) {
      if (cand.cost >= kInfCost) continue;
      comp_edges.push_back({key.first, key.second, cand.cost});
    }
    std::vector<NodeId> comp_ids(nc);
    for (int c = 0; c < nc; ++c) comp_ids[c] = c;
    MstResult comp_mst = kruskal(comp_edges, comp_ids);
    if (comp_mst.components != 1) {
      throw InfeasibleError("reconnect: components are mutually unreachable");
    }

    for (const Edge& ce : comp_mst.edges) {
      const Candidate& cand = best.at({ce.u, ce.v});
      // Recover the realizing path from its representative's tree.
      const PathResult* pr = nullptr;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (reps[i] == cand.rep) {
          pr = &rep_paths[i];
          break;
        }
      }
      for (const Edge& pe : pr->path_edges_to(cand.to)) {
        union_edges.insert(pe);
        union_nodes.insert(pe.u);
        union_nodes.insert(pe.v);
      }
    }
  }

  std::vector<Edge> all(union_edges.begin(), union_edges.end());
  std::vector<NodeId> nodes(union_nodes.begin(), union_nodes.end());
  MstResult mst = kruskal(all, nodes);
  if (mst.components != 1) {
    throw InfeasibleError("reconnect: expanded union is still disconnected");
  }
  return prune_degree_one(
      Solution::from_edges_and_nodes(std::move(mst.edges), nodes), instance);
}

namespace {

std::vector<NodeId> insertion_start_nodes(const Instance& instance,
                                          const Solution& base, int b,
                                          const VndParams& params,
                                          const ScoreTable& scores) {
  std::map<NodeId, int> sol_deg = solution_degrees(base);
  std::vector<NodeId> branch;
  for (NodeId v : base.nodes) {
    if (branch_degree_over_two(instance, params, sol_deg, v)) branch.push_back(v);
  }
  int k = start_budget(instance, b);
  if (!branch.empty()) return scores.top_scored(branch, k);
  // Path-shaped solutions have no branch nodes; fall back to terminals.
  std::vector<NodeId> terminals;
  for (NodeId v : base.nodes) {
    if (instance.is_terminal(v)) terminals.push_back(v);
  }
  return scores.top_scored(terminals, k);
}

std::vector<NodeId> new_nodes(const Solution& before, const Solution& after) {
  std::vector<NodeId> fresh;
  std::set_difference(after.nodes.begin(), after.nodes.end(), before.nodes.begin(),
                      before.nodes.end(), std::back_inserter(fresh));
  return fresh;
}

} // namespace

Solution insertion_local_search(const Instance& instance, const Solution& s, int b,
                                const VndParams& params, ScoreTable& scores,
                                Rng& rng) {
  Solution work = s;
  int restarts_left = params.max_score_restarts;
  for (;;) {
    std::vector<NodeId> starts =
        insertion_start_nodes(instance, work, b, params, scores);
    for (NodeId start : starts) {
      if (!work.contains_node(start)) continue; // dropped by an earlier insertion
      std::vector<NodeId> path = random_path(instance, work, start, params, rng);
      if (path.empty()) continue;
      Solution next = insert_path(instance, work, path);
      std::vector<NodeId> fresh = new_nodes(work, next);
      work = std::move(next);
      if (work.cost < s.cost) {
        scores.record_outcome(work.nodes, true);
        scores.advance_iteration();
        return work;
      }
      scores.record_outcome(fresh, false);
      scores.advance_iteration();
    }
    if (restarts_left-- <= 0) break;
    scores.restart(rng);
  }
  return work.cost < s.cost ? work : s;
}

Solution removal_local_search(const Instance& instance, const Solution& s, int b,
                              const VndParams& params, ScoreTable& scores,
                              Rng& rng) {
  std::vector<NodeId> steiner;
  for (NodeId v : s.nodes) {
    if (!instance.is_terminal(v)) steiner.push_back(v);
  }
  if (static_cast<int>(steiner.size()) < b || b <= 0) return s;

  int restarts_left = params.max_score_restarts;
  for (;;) {
    std::vector<NodeId> pool = scores.top_scored(steiner, 3 * b);
    int p = static_cast<int>(pool.size());

    // How many distinct b-subsets the pool offers, saturated well above the
    // sampling cap.
    long long combos = 1;
    for (int i = 1; i <= b; ++i) {
      combos = combos * (p - i + 1) / i;
      if (combos > 1'000'000) {
        combos = 1'000'000;
        break;
      }
    }
    int want = static_cast<int>(
        std::min<long long>(params.combination_cap, combos));

    std::vector<std::vector<int>> subsets;
    if (combos <= params.combination_cap) {
      // Few enough to enumerate; visit them in random order.
      std::vector<int> idx(b);
      for (int i = 0; i < b; ++i) idx[i] = i;
      for (;;) {
        subsets.push_back(idx);
        int i = b - 1;
        while (i >= 0 && idx[i] == p - b + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
      }
      for (std::size_t i = 0; i + 1 < subsets.size(); ++i) {
        std::size_t j = i + rng.bounded(subsets.size() - i);
        std::swap(subsets[i], subsets[j]);
      }
    } else {
      std::set<std::vector<int>> seen;
      std::vector<int> scratch(p);
      for (int i = 0; i < p; ++i) scratch[i] = i;
      int guard = 40 * want;
      while (static_cast<int>(subsets.size()) < want && guard-- > 0) {
        for (int i = 0; i < b; ++i) {
          std::size_t j = i + rng.bounded(static_cast<std::uint64_t>(p - i));
          std::swap(scratch[i], scratch[j]);
        }
        std::vector<int> pick(scratch.begin(), scratch.begin() + b);
        std::sort(pick.begin(), pick.end());
        if (seen.insert(pick).second) subsets.push_back(std::move(pick));
      }
    }

    for (const std::vector<int>& subset : subsets) {
      std::vector<char> victim(instance.graph.capacity(), 0);
      for (int i : subset) victim[pool[i]] = 1;
      std::vector<Edge> piece_edges;
      for (const Edge& e : s.edges) {
        if (!victim[e.u] && !victim[e.v]) piece_edges.push_back(e);
      }
      std::vector<NodeId> piece_nodes;
      for (NodeId v : s.nodes) {
        if (!victim[v]) piece_nodes.push_back(v);
      }
      Solution next = reconnect(instance, piece_edges, piece_nodes, rng);
      if (next.cost < s.cost) {
        scores.record_outcome(next.nodes, true);
        scores.advance_iteration();
        return next;
      }
      scores.record_outcome(new_nodes(s, next), false);
      scores.advance_iteration();
    }
    if (restarts_left-- <= 0) break;
    scores.restart(rng);
  }
  return s;
}

Solution vnd_descent(const Instance& instance, const Solution& s0,
                     const VndParams& params, ScoreTable& scores, Rng& rng,
                     const VndHooks& hooks) {
  Solution best = s0;
  Solution cur = s0;
  int b = params.b_min;
  while (b <= params.b_max) {
    if (hooks.round_boundary && !hooks.round_boundary()) break;

    Solution ins = insertion_local_search(instance, cur, b, params, scores, rng);
    if (ins.cost < cur.cost) {
      cur = std::move(ins);
      b = params.b_min;
      if (cur.cost < best.cost) {
        best = cur;
        if (hooks.publish) hooks.publish(best.cost, best);
      }
      continue;
    }

    Solution rem = removal_local_search(instance, cur, b, params, scores, rng);
    if (rem.cost < cur.cost) {
      cur = std::move(rem);
      b = params.b_min;
      if (cur.cost < best.cost) {
        best = cur;
        if (hooks.publish) hooks.publish(best.cost, best);
      }
      continue;
    }

    b *= 2;
  }
  return best;
}

} // namespace stvnd
