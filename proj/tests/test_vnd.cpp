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

#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "stvnd/construct.hpp"
#include "stvnd/reduce.hpp"
#include "stvnd/tree_ops.hpp"
#include "stvnd/vnd.hpp"
#include "testutil.hpp"

using namespace stvnd;

namespace {

ScoreTable fresh_scores(const Instance& inst) {
  return ScoreTable(inst, ScoreParams{});
}

bool is_valid(const Instance& inst, const Solution& s) {
  return !validate_tree(inst, s).has_value();
}

// Path solution 1-2-3 on K4STAR, cost 6. Improvable to the star (cost 3).
Solution k4star_path_solution() {
  return Solution::from_edges({make_edge(1, 2, 3), make_edge(2, 3, 3)});
}

Solution k4star_star_solution() {
  return Solution::from_edges(
      {make_edge(1, 4, 1), make_edge(2, 4, 1), make_edge(3, 4, 1)});
}

Solution path3_optimal() {
  return Solution::from_edges({make_edge(1, 2, 1), make_edge(2, 3, 1)});
}

// Terminals 1,2,3 around hub 4 (unit spokes) plus a costlier detour
// 1-5-2. Used to exercise Steiner-node removal.
Instance make_detour() {
  Graph g = Graph::one_based(5);
  g.add_edge(1, 4, 1);
  g.add_edge(2, 4, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(1, 5, 2);
  g.add_edge(5, 2, 2);
  return Instance::make(std::move(g), {1, 2, 3});
}

std::set<std::pair<NodeId, NodeId>> edge_set(const Solution& s) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const Edge& e : s.edges) out.insert({e.u, e.v});
  return out;
}

} // namespace

TEST_CASE("random_path walks from a branch-free start to a solution node") {
  Instance inst = testutil::make_k4star();
  Solution star = k4star_star_solution();
  VndParams params;
  Rng rng(11);

  // Node 4 is the only branch node, so targets fall back to any other
  // solution node; all of 4's neighbors qualify, giving a two-node walk.
  for (int i = 0; i < 20; ++i) {
    std::vector<NodeId> path = random_path(inst, star, 4, params, rng);
    REQUIRE(path.size() == 2);
    CHECK(path.front() == 4);
    CHECK(path.back() >= 1);
    CHECK(path.back() <= 3);
  }
}

TEST_CASE("random_path visits only graph edges and never repeats a node") {
  Rng gen(91);
  VndParams params;
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = testutil::random_connected_instance(gen, 12, 4);
    InitialResult init = initial_solution(inst);
    const Solution& s = init.solution;
    if (s.nodes.size() < 2) continue;
    Rng rng(trial);
    std::vector<NodeId> path = random_path(inst, s, s.nodes.front(), params, rng);
    if (path.empty()) continue;
    ++checked;
    CHECK(path.size() >= 2);
    CHECK(path.front() == s.nodes.front());
    CHECK(s.contains_node(path.back()));
    std::set<NodeId> seen;
    for (std::size_t i = 0; i < path.size(); ++i) {
      CHECK(seen.insert(path[i]).second);
      if (i > 0) CHECK(inst.graph.has_edge(path[i - 1], path[i]));
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("random_path returns empty when no target exists") {
  Instance inst = Instance::make(testutil::make_path3().graph, {1});
  Solution s = Solution::single_node(1);
  VndParams params;
  Rng rng(3);
  CHECK(random_path(inst, s, 1, params, rng).empty());
}

TEST_CASE("random_path is deterministic for a fixed seed") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  VndParams params;
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 10; ++i) {
    CHECK(random_path(inst, s, 1, params, a) ==
          random_path(inst, s, 1, params, b));
  }
}

TEST_CASE("insert_path keeps the solution when the path is already inside") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  std::vector<NodeId> path = {1, 2};
  Solution out = insert_path(inst, s, path);
  CHECK(out.cost == s.cost);
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("insert_path swaps expensive edges for the inserted detour") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  std::vector<NodeId> path = {1, 4, 2};
  Solution out = insert_path(inst, s, path);
  CHECK(out.cost == 5);
  CHECK(out.contains_edge(1, 4));
  CHECK(out.contains_edge(2, 4));
  CHECK(out.contains_edge(2, 3));
  CHECK_FALSE(out.contains_edge(1, 2));
  CHECK(is_valid(inst, out));
}

TEST_CASE("insert_path prunes insertions that only add a dead leaf") {
  Graph g = Graph::one_based(4);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 1);
  g.add_edge(2, 4, 1);
  Instance inst = Instance::make(std::move(g), {1, 3});
  Solution s = path3_optimal();
  std::vector<NodeId> path = {2, 4};
  Solution out = insert_path(inst, s, path);
  CHECK(out.cost == 2);
  CHECK_FALSE(out.contains_node(4));
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("insertion local search improves the K4STAR path solution") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(5);
  Solution out = insertion_local_search(inst, s, 1, params, scores, rng);
  CHECK(out.cost < s.cost);
  CHECK(out.cost >= 3);
  CHECK(is_valid(inst, out));
}

TEST_CASE("insertion local search leaves an optimal solution alone") {
  Instance inst = testutil::make_path3();
  Solution s = path3_optimal();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(9);
  Solution out = insertion_local_search(inst, s, 1, params, scores, rng);
  CHECK(out.cost == s.cost);
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("insertion local search no-ops on a single-node solution") {
  Instance inst = Instance::make(testutil::make_path3().graph, {2});
  Solution s = Solution::single_node(2);
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(1);
  Solution out = insertion_local_search(inst, s, 1, params, scores, rng);
  CHECK(out.cost == 0);
  CHECK(out.nodes == std::vector<NodeId>{2});
  CHECK(out.edges.empty());
}

TEST_CASE("reconnect bridges singleton components through the hub") {
  Instance full = testutil::make_k4star();
  ReduceResult reduced = reduce_fixpoint(full);
  const Instance& inst = reduced.instance;
  REQUIRE(inst.graph.live_edge_count() == 3);

  std::vector<Edge> piece_edges;
  std::vector<NodeId> piece_nodes = {1, 2, 3};
  Rng rng(17);
  Solution out = reconnect(inst, piece_edges, piece_nodes, rng);
  CHECK(out.cost == 3);
  CHECK(out.contains_node(4));
  CHECK(is_valid(inst, out));
}

TEST_CASE("reconnect of a single component is MST plus prune") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  Rng rng(23);
  Solution out = reconnect(inst, s.edges, s.nodes, rng);
  CHECK(out.cost == s.cost);
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("reconnect uses the only available bridge") {
  Graph g = Graph::one_based(4);
  g.add_edge(1, 3, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(4, 2, 1);
  Instance inst = Instance::make(std::move(g), {1, 2});
  std::vector<Edge> piece_edges;
  std::vector<NodeId> piece_nodes = {1, 2};
  Rng rng(31);
  Solution out = reconnect(inst, piece_edges, piece_nodes, rng);
  CHECK(out.cost == 3);
  CHECK(out.contains_edge(1, 3));
  CHECK(out.contains_edge(3, 4));
  CHECK(out.contains_edge(4, 2));
}

TEST_CASE("removal local search drops the redundant detour node") {
  Instance inst = make_detour();
  Solution s = Solution::from_edges({make_edge(1, 5, 2), make_edge(5, 2, 2),
                                     make_edge(1, 4, 1), make_edge(3, 4, 1)});
  REQUIRE(s.cost == 6);
  REQUIRE(is_valid(inst, s));
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(13);
  Solution out = removal_local_search(inst, s, 1, params, scores, rng);
  CHECK(out.cost == 3);
  CHECK_FALSE(out.contains_node(5));
  CHECK(is_valid(inst, out));
}

TEST_CASE("removal local search no-ops when b exceeds the Steiner pool") {
  Instance inst = make_detour();
  Solution s = Solution::from_edges({make_edge(1, 5, 2), make_edge(5, 2, 2),
                                     make_edge(1, 4, 1), make_edge(3, 4, 1)});
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(13);
  Solution out = removal_local_search(inst, s, 3, params, scores, rng);
  CHECK(out.cost == s.cost);
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("removal local search no-ops without Steiner nodes") {
  Instance inst = testutil::make_k4star();
  Solution s = k4star_path_solution();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(29);
  Solution out = removal_local_search(inst, s, 1, params, scores, rng);
  CHECK(out.cost == s.cost);
  CHECK(edge_set(out) == edge_set(s));
}

TEST_CASE("vnd descent drives the K4STAR path solution to the star") {
  Instance inst = testutil::make_k4star();
  Solution s0 = k4star_path_solution();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(7);

  std::vector<Cost> bounds;
  VndHooks hooks;
  hooks.publish = [&](Cost c, const Solution& sol) {
    bounds.push_back(c);
    CHECK(is_valid(inst, sol));
  };
  Solution out = vnd_descent(inst, s0, params, scores, rng, hooks);

  CHECK(out.cost == 3);
  CHECK(out.contains_node(4));
  CHECK(is_valid(inst, out));
  REQUIRE_FALSE(bounds.empty());
  CHECK(bounds.back() == 3);
  for (std::size_t i = 1; i < bounds.size(); ++i) CHECK(bounds[i] < bounds[i - 1]);
  CHECK(bounds.front() < s0.cost);
}

TEST_CASE("vnd descent publishes nothing from an optimal start") {
  Instance inst = testutil::make_path3();
  Solution s0 = path3_optimal();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(7);
  int publishes = 0;
  VndHooks hooks;
  hooks.publish = [&](Cost, const Solution&) { ++publishes; };
  Solution out = vnd_descent(inst, s0, params, scores, rng, hooks);
  CHECK(out.cost == s0.cost);
  CHECK(edge_set(out) == edge_set(s0));
  CHECK(publishes == 0);
}

TEST_CASE("vnd descent stops when the round boundary says so") {
  Instance inst = testutil::make_k4star();
  Solution s0 = k4star_path_solution();
  ScoreTable scores = fresh_scores(inst);
  VndParams params;
  Rng rng(7);
  VndHooks hooks;
  hooks.round_boundary = [] { return false; };
  Solution out = vnd_descent(inst, s0, params, scores, rng, hooks);
  CHECK(out.cost == s0.cost);
  CHECK(edge_set(out) == edge_set(s0));
}

TEST_CASE("vnd descent never worsens and stays deterministic") {
  Rng gen(2026);
  for (int trial = 0; trial < 25; ++trial) {
    Instance inst = testutil::random_connected_instance(gen, 12, 4);
    InitialResult init = initial_solution(inst);
    VndParams params;

    std::vector<Cost> bounds;
    VndHooks hooks;
    hooks.publish = [&](Cost c, const Solution& sol) {
      bounds.push_back(c);
      CHECK(is_valid(inst, sol));
    };

    ScoreTable scores_a = fresh_scores(inst);
    Rng rng_a(trial);
    Solution a = vnd_descent(inst, init.solution, params, scores_a, rng_a, hooks);
    CHECK(a.cost <= init.solution.cost);
    CHECK(is_valid(inst, a));
    for (std::size_t i = 1; i < bounds.size(); ++i) CHECK(bounds[i] < bounds[i - 1]);

    ScoreTable scores_b = fresh_scores(inst);
    Rng rng_b(trial);
    Solution b = vnd_descent(inst, init.solution, params, scores_b, rng_b);
    CHECK(a.cost == b.cost);
    CHECK(edge_set(a) == edge_set(b));
  }
}
