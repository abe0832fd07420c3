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

#include <functional>
#include <span>
#include <vector>

#include "stvnd/graph.hpp"
#include "stvnd/rng.hpp"
#include "stvnd/scores.hpp"

namespace stvnd {

struct VndParams {
  int b_min = 1;
  int b_max = 256;
  int max_score_restarts = 5; // per local-search call
  int combination_cap = 50;   // removal neighborhoods sampled per sweep
  int walk_cap = 0;           // max walk steps; 0 means 4 * live nodes
  int walk_attempts = 10;     // dead-end retries per start node
  // delta(i) > 2 is normally measured inside the solution tree (branch
  // nodes); this switch measures it in the graph instead.
  bool graph_degree = false;
};

/// Receives every strict improvement of the best solution, in order.
using BoundSink = std::function<void(Cost, const Solution&)>;

/// Orchestration points. publish fires on each new best; round_boundary runs
/// before every neighborhood round and stops the descent when it returns
/// false (time limit, external shutdown).
struct VndHooks {
  BoundSink publish;
  std::function<bool()> round_boundary;
};

/// Self-avoiding random walk from start to another solution node with
/// solution-degree > 2 (any solution node when no such target exists).
/// Returns the node sequence including both endpoints, or empty when every
/// attempt dead-ends or overruns the caps.
std::vector<NodeId> random_path(const Instance& instance, const Solution& s,
                                NodeId start, const VndParams& params, Rng& rng);

/// MST of the edge union of s and the path, then degree-1 Steiner pruning.
/// Never invalid; cost may go either way.
Solution insert_path(const Instance& instance, const Solution& s,
                     std::span<const NodeId> path);

/// Rebuilds one tree from disconnected solution pieces: a few random
/// representatives per component, shortest paths between components, MST
/// over the component graph, then MST + prune over the expanded union.
Solution reconnect(const Instance& instance, std::span<const Edge> piece_edges,
                   std::span<const NodeId> piece_nodes, Rng& rng);

/// First-improvement sweep over walk insertions from the best-scored branch
/// nodes. Non-improving insertions accumulate in the working copy, which is
/// dropped at the end unless it beat s.
Solution insertion_local_search(const Instance& instance, const Solution& s, int b,
                                const VndParams& params, ScoreTable& scores,
                                Rng& rng);

/// First-improvement sweep over deleting b-subsets of the 3b best-scored
/// Steiner nodes and reconnecting.
Solution removal_local_search(const Instance& instance, const Solution& s, int b,
                              const VndParams& params, ScoreTable& scores, Rng& rng);

/// Neighborhood-size escalation: insertion then removal at size b; any
/// improvement resets b to b_min, otherwise b doubles until it passes b_max.
Solution vnd_descent(const Instance& instance, const Solution& s0,
                     const VndParams& params, ScoreTable& scores, Rng& rng,
                     const VndHooks& hooks = {});

} // namespace stvnd
