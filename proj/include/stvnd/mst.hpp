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

#include <span>
#include <vector>

#include "stvnd/graph.hpp"

namespace stvnd {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x);
  /// Returns false if x and y were already joined.
  bool unite(int x, int y);

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

/// Spanning forest result. components == 1 means a spanning tree was found.
struct MstResult {
  std::vector<Edge> edges; // canonical, sorted by (u, v)
  Cost cost = 0;
  int components = 0;
};

/// Kruskal over an explicit edge list. `nodes` declares which vertices exist
/// (isolated ones count as extra components). Candidate order (cost, u, v)
/// makes the forest unique for fixed input sets.
MstResult kruskal(std::span<const Edge> edges, std::span<const NodeId> nodes);

/// MST of the live subgraph.
MstResult minimum_spanning_tree(const Graph& graph);

} // namespace stvnd
