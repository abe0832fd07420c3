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

#include "stvnd/graph.hpp"
#include "stvnd/reduce.hpp"

namespace stvnd {

/// What survives of the graph after expanding the terminal-tree paths:
/// kEdge keeps only the expansion edges themselves; kVertex keeps the
/// expansion vertices with every edge the graph induces on them.
enum class PruneVariant { kEdge, kVertex };

/// Expansion paths plus the pruned-subgraph edge set the variant produced.
struct ExpandedTmst {
  TmstData tmst;
  std::vector<NodeId> nodes; // union of expansion path nodes, sorted
  std::vector<Edge> edges;   // pruned subgraph, canonical order
};

ExpandedTmst expand_tmst(const Instance& instance, PruneVariant variant);

/// MST of the pruned subgraph with degree-1 Steiner leaves removed. The
/// result is always a valid tree spanning the terminals, and its cost is at
/// most twice the optimum (the classical distance-network argument).
Solution construct(const Instance& instance, PruneVariant variant);

struct InitialResult {
  Solution solution;
  PruneVariant variant; // which pruning won; ties go to kEdge
};

/// Better of the two constructions.
InitialResult initial_solution(const Instance& instance);

} // namespace stvnd
