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

#include "doctest.h"

#include "stvnd/construct.hpp"
#include "stvnd/exact.hpp"
#include "stvnd/tree_ops.hpp"
#include "testutil.hpp"

using namespace stvnd;
using namespace stvnd::testutil;

TEST_CASE("both variants recover the star") {
  Instance inst = make_k4star();
  Solution edge = construct(inst, PruneVariant::kEdge);
  CHECK(edge.cost == 3);
  CHECK(!validate_tree(inst, edge).has_value());
  Solution vertex = construct(inst, PruneVariant::kVertex);
  CHECK(vertex.cost == 3);
  CHECK(vertex.contains_node(4));
}

TEST_CASE("line instance constructs the line") {
  Instance inst = make_path3();
  InitialResult r = initial_solution(inst);
  CHECK(r.solution.cost == 2);
  CHECK(r.variant == PruneVariant::kEdge); // tie goes to edge pruning
}

TEST_CASE("adjacent unit terminals need no steiner nodes") {
  Graph g = Graph::one_based(3);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 1);
  g.add_edge(1, 3, 1);
  Instance inst = Instance::make(std::move(g), {1, 2, 3});
  Solution edge = construct(inst, PruneVariant::kEdge);
  Solution vertex = construct(inst, PruneVariant::kVertex);
  CHECK(edge.cost == 2);
  CHECK(vertex.cost == 2);
  CHECK(edge.edges == vertex.edges);
}

TEST_CASE("single terminal constructs a bare node") {
  Instance p3 = make_path3();
  Instance single = Instance::make(p3.graph, {3});
  InitialResult r = initial_solution(single);
  CHECK(r.solution.cost == 0);
  CHECK(r.solution.nodes == std::vector<NodeId>{3});
}

TEST_CASE("initial solutions validate and stay within twice the optimum") {
  Rng rng(1215);
  for (int round = 0; round < 60; ++round) {
    Instance inst = random_connected_instance(rng, 14, 5);
    InitialResult r = initial_solution(inst);
    CHECK(!validate_tree(inst, r.solution).has_value());
    ExactResult opt = exact_steiner(inst);
    CHECK(r.solution.cost <= 2 * opt.cost);
    CHECK(r.solution.cost >= opt.cost);
  }
}

TEST_CASE("expansion union always contains the terminals") {
  Rng rng(31);
  for (int round = 0; round < 20; ++round) {
    Instance inst = random_connected_instance(rng, 12, 4);
    for (PruneVariant v : {PruneVariant::kEdge, PruneVariant::kVertex}) {
      ExpandedTmst ex = expand_tmst(inst, v);
      for (NodeId t : inst.terminals) {
        CHECK(std::find(ex.nodes.begin(), ex.nodes.end(), t) != ex.nodes.end());
      }
    }
  }
}

TEST_CASE("vertex pruning sees induced shortcuts that edge pruning misses") {
  // Terminals 1,2,3. Expansion paths 1-4-2 and 1-5-3 cost 8 together; the
  // induced subgraph on the expansion nodes also holds the cheap bridge 4-5,
  // which lets the vertex variant swap a cost-2 edge for it.
  Graph g = Graph::one_based(5);
  g.add_edge(1, 4, 2);
  g.add_edge(4, 2, 2);
  g.add_edge(1, 5, 2);
  g.add_edge(5, 3, 2);
  g.add_edge(4, 5, 1);
  Instance inst = Instance::make(std::move(g), {1, 2, 3});
  Solution edge = construct(inst, PruneVariant::kEdge);
  Solution vertex = construct(inst, PruneVariant::kVertex);
  CHECK(edge.cost == 8);
  CHECK(vertex.cost == 7);
  CHECK(vertex.contains_edge(4, 5));
  InitialResult r = initial_solution(inst);
  CHECK(r.solution.cost == 7);
  CHECK(r.variant == PruneVariant::kVertex);
}
