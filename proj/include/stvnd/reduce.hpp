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

#include <optional>
#include <string>
#include <vector>

#include "stvnd/graph.hpp"
#include "stvnd/paths.hpp"

namespace stvnd {

enum class ReductionKind { kNodeRemoval, kEdgeRemoval };

/// One removal, recorded against the snapshot the test ran on. Tests never
/// name terminals as node subjects.
struct ReductionEvent {
  ReductionKind kind;
  NodeId node = -1;      // node removals
  NodeId u = -1, v = -1; // edge removals
  std::string test;      // degree | triangle | special_distance | reachability | voronoi
  std::optional<Cost> bound; // present only for bound-based tests

  static ReductionEvent node_removal(NodeId node, std::string test,
                                     std::optional<Cost> bound = std::nullopt);
  static ReductionEvent edge_removal(NodeId u, NodeId v, std::string test,
                                     std::optional<Cost> bound = std::nullopt);
};

struct ReductionLog {
  std::vector<ReductionEvent> events;

  int node_removals() const;
  int edge_removals() const;
  void append(std::vector<ReductionEvent> more);
  /// One `kind,subject,test,bound` line per event; bound column empty for
  /// general tests.
  std::string to_csv() const;
};

/// Replays events onto a graph. Every subject must still be live: events are
/// only valid against the state they were recorded on.
void apply_events(Graph& graph, const std::vector<ReductionEvent>& events);

/// Cascade-removes non-terminals of degree <= 1. Pure: simulates the cascade
/// and returns it in ascending-id processing order.
std::vector<ReductionEvent> reduce_degree(const Instance& instance);

/// MST of the terminal distance graph, with everything later stages reuse:
/// per-terminal shortest-path trees, realized expansion paths, the max edge
/// cost, and the per-pair path bottleneck table.
struct TmstEdge {
  NodeId t1, t2; // terminal ids, t1 < t2
  Cost dist;     // d(t1, t2)
  std::vector<NodeId> path; // realizing shortest path, from t1 to t2
};

struct TmstData {
  std::vector<NodeId> terminals;          // sorted
  std::vector<PathResult> terminal_paths; // parallel to terminals
  std::vector<TmstEdge> edges;
  Cost total_cost = 0;
  Cost max_edge_cost = 0; // 0 when the TMST has no edges (|T| = 1)
  std::vector<std::vector<Cost>> bottleneck; // max edge on TMST path, by index

  int terminal_index(NodeId t) const;
  const PathResult& paths_from(NodeId t) const;
  Cost pair_bottleneck(NodeId t1, NodeId t2) const;
};

/// Throws InfeasibleError when some terminal pair is unreachable.
TmstData build_tmst(const Instance& instance);

/// Edges costing strictly more than the max TMST edge are in no optimal tree.
/// No-op when the TMST has no edges.
std::vector<ReductionEvent> reduce_triangle(const Instance& instance,
                                            const TmstData& tmst);

/// Precomputed state for the special-distance bound: the k nearest terminals
/// of every node plus the TMST bottleneck table.
struct SdContext {
  TmstData tmst;
  int k = 10;
  std::vector<std::vector<int>> nearest; // node id -> terminal indices, by (dist, id)
};

SdContext make_sd_context(const Instance& instance, int k = 10);

/// Upper bound on the special distance between i and j: the best special
/// path routed through the k nearest terminals of each endpoint, or the
/// plain distance d(i, j) if that is smaller. Restricting the candidate
/// terminals only raises the value, so removals stay safe.
Cost special_distance(const SdContext& ctx, const Instance& instance, NodeId i,
                      NodeId j);

/// Removes every edge with cost strictly above its special-distance bound.
std::vector<ReductionEvent> reduce_special_distance(const Instance& instance,
                                                    int k = 10);

/// Removes non-terminals whose distance to some terminal exceeds B: a tree
/// of cost <= B through such a node cannot exist.
std::vector<ReductionEvent> reduce_reachability(const Instance& instance, Cost bound);

struct VoronoiPartition {
  std::vector<NodeId> base;    // nearest terminal per node (-1 for dead/unreachable)
  std::vector<Cost> dist_base; // d(v, base)
  std::vector<NodeId> second;  // second-nearest terminal (-1 if none)
  std::vector<Cost> dist_second;
  std::vector<NodeId> region_terminal; // terminals owning a region, sorted
  std::vector<std::optional<Cost>> radius; // parallel; absent when region = V
  std::vector<Cost> radii_ascending;       // defined radii, sorted

  /// Sum of the min(count, defined) smallest radii, saturated at kInfCost.
  Cost smallest_radii_sum(int count) const;
};

/// Nearest/second-nearest terminals per node, ties to the smaller terminal
/// id, plus each region's radius.
VoronoiPartition voronoi_partition(const Instance& instance);

/// Removes non-terminals whose region-based lower bound strictly exceeds B.
std::vector<ReductionEvent> reduce_voronoi(const Instance& instance, Cost bound);

struct ReduceResult {
  Instance instance;
  ReductionLog log;
};

/// Runs degree, triangle and special-distance tests in rounds to a fixpoint;
/// with a bound, reachability and Voronoi tests join each round. Throws
/// InfeasibleError if terminals end up (equivalently: started) disconnected.
ReduceResult reduce_fixpoint(const Instance& instance,
                             std::optional<Cost> bound = std::nullopt,
                             int sd_cap = 10);

} // namespace stvnd
