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

#include "stvnd/graph.hpp"

namespace stvnd {

/// First problem found when checking a solution against an instance.
/// Checks run in this order; only the first hit is reported.
enum class TreeViolationKind {
  kUnknownEdge,      // edge absent from the graph or cost mismatch with it
  kCycle,            // |E| != |V| - 1 with |E| too large, or an actual cycle
  kDisconnected,
  kMissingTerminal,
  kCostMismatch,     // cached cost != sum of edge costs
};

struct TreeViolation {
  TreeViolationKind kind;
  std::string detail;
};

/// nullopt means: edges exist in `instance.graph` with matching costs, the
/// edge set is a tree over the node set, every terminal is covered, and the
/// cached cost is the edge sum.
std::optional<TreeViolation> validate_tree(const Instance& instance,
                                           const Solution& solution);

/// Repeatedly removes degree-1 nodes that are not protected. `keep` is a mask
/// by node id; terminals are the usual protected set.
Solution prune_degree_one(const Solution& solution, const std::vector<char>& keep);

/// Convenience: prune with the instance's terminals protected.
Solution prune_degree_one(const Solution& solution, const Instance& instance);

} // namespace stvnd
