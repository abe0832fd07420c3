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

#include <string>
#include <vector>

#include "doctest.h"
#include "stvnd/solve.hpp"
#include "stvnd/tree_ops.hpp"
#include "testutil.hpp"

using namespace stvnd;

namespace {

SolveConfig quick_config(std::uint64_t seed) {
  SolveConfig cfg;
  cfg.seed = seed;
  cfg.deterministic = true;
  return cfg;
}

bool is_valid(const Instance& inst, const Solution& s) {
  return !validate_tree(inst, s).has_value();
}

// K4STAR plus a distant degree-2 node 5; every reduction family has
// something to remove once the cost-3 bound is published.
Instance make_k4star_with_outpost() {
  Graph g = Graph::one_based(5);
  g.add_edge(1, 4, 1);
  g.add_edge(2, 4, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(1, 2, 3);
  g.add_edge(2, 3, 3);
  g.add_edge(1, 3, 3);
  g.add_edge(5, 4, 10);
  g.add_edge(5, 1, 10);
  return Instance::make(std::move(g), {1, 2, 3});
}

} // namespace

TEST_CASE("solve finds the K4STAR optimum for any seed") {
  Instance inst = testutil::make_k4star();
  for (std::uint64_t seed : {1, 5, 9, 42}) {
    SolveResult r = solve(inst, quick_config(seed));
    CHECK(r.cost == 3);
    CHECK(r.best.contains_node(4));
    CHECK(is_valid(inst, r.best));
    CHECK_FALSE(r.hit_time_limit);
  }
}

TEST_CASE("solve keeps an already-forced instance as is") {
  Graph g = Graph::one_based(2);
  g.add_edge(1, 2, 1);
  Instance inst = Instance::make(std::move(g), {1, 2});
  SolveResult r = solve(inst, quick_config(3));
  CHECK(r.cost == 1);
  REQUIRE(r.bounds.size() == 1);
  CHECK(r.bounds.front().cost == 1);
  CHECK(is_valid(inst, r.best));
}

TEST_CASE("bound scheduler accepts only strict improvements") {
  BoundScheduler sched;
  CHECK(sched.submit(6));
  CHECK(sched.take_scheduled() == Cost{6});
  CHECK_FALSE(sched.submit(6));
  CHECK_FALSE(sched.submit(7));
  CHECK_FALSE(sched.take_scheduled().has_value());
  CHECK(sched.submit(3));
  CHECK(sched.take_scheduled() == Cost{3});
  CHECK(sched.scheduled_rounds() == 2);
  CHECK(sched.best() == Cost{3});
}

TEST_CASE("published bounds decrease and validate on the original instance") {
  Rng gen(404);
  for (int trial = 0; trial < 10; ++trial) {
    Instance inst = testutil::random_connected_instance(gen, 14, 5);
    SolveResult r = solve(inst, quick_config(trial));

    REQUIRE_FALSE(r.bounds.empty());
    REQUIRE(r.bound_solutions.size() == r.bounds.size());
    CHECK(r.bounds.back().cost == r.cost);
    CHECK(r.time_to_best_ms <= r.total_ms);
    for (std::size_t i = 0; i < r.bounds.size(); ++i) {
      CHECK(r.bound_solutions[i].cost == r.bounds[i].cost);
      CHECK(is_valid(inst, r.bound_solutions[i]));
      if (i > 0) CHECK(r.bounds[i].cost < r.bounds[i - 1].cost);
      if (i > 0) CHECK(r.bounds[i].at_ms >= r.bounds[i - 1].at_ms);
    }
    CHECK(is_valid(inst, r.best));
  }
}

TEST_CASE("deterministic mode reproduces results byte for byte") {
  Instance k4 = testutil::make_k4star();
  std::string a = result_to_json(solve(k4, quick_config(7)), "K4STAR");
  std::string b = result_to_json(solve(k4, quick_config(7)), "K4STAR");
  CHECK(a == b);

  Rng gen(88);
  Instance rnd = testutil::random_connected_instance(gen, 16, 5);
  std::string c = result_to_json(solve(rnd, quick_config(7)), "RND");
  std::string d = result_to_json(solve(rnd, quick_config(7)), "RND");
  CHECK(c == d);
  CHECK(a != c);
}

TEST_CASE("target cost short-circuits the descent") {
  Instance inst = testutil::make_k4star();
  SolveConfig cfg = quick_config(7);
  cfg.target_cost = 3;
  SolveResult r = solve(inst, cfg);
  CHECK(r.cost == 3);
  CHECK(r.bounds.size() == 1);
  CHECK(r.rounds == 0);

  cfg.target_cost = 100;
  SolveResult lax = solve(inst, cfg);
  CHECK(lax.cost == 3);
  CHECK(lax.rounds == 0);
}

TEST_CASE("solve rejects a non-positive time limit") {
  Instance inst = testutil::make_k4star();
  SolveConfig cfg = quick_config(1);
  cfg.time_limit_s = 0.0;
  CHECK_THROWS_AS(solve(inst, cfg), InputError);
  cfg.time_limit_s = -5.0;
  CHECK_THROWS_AS(solve(inst, cfg), InputError);
}

TEST_CASE("solve rejects instances whose terminals cannot be connected") {
  Graph g = Graph::one_based(4);
  g.add_edge(1, 2, 1);
  g.add_edge(3, 4, 1);
  Instance inst = Instance::make(std::move(g), {1, 3});
  CHECK_THROWS_AS(solve(inst, quick_config(1)), InfeasibleError);
}

TEST_CASE("bound-based tests fire once the first bound lands") {
  Instance inst = make_k4star_with_outpost();
  SolveResult r = solve(inst, quick_config(7));
  CHECK(r.cost == 3);

  // Triangle strips the three cost-3 chords and both cost-10 outpost edges;
  // the bound round then removes the now-unreachable node 5.
  CHECK(r.reductions.edge_removals() == 5);
  REQUIRE(r.reductions.node_removals() == 1);
  CHECK(r.bound_reduction_rounds >= 1);
  bool saw_outpost = false;
  for (const ReductionEvent& e : r.reductions.events) {
    if (e.kind != ReductionKind::kNodeRemoval) continue;
    saw_outpost = true;
    CHECK(e.node == 5);
    CHECK(e.test == "reachability");
    CHECK(e.bound == Cost{3});
    CHECK_FALSE(r.best.contains_node(e.node));
  }
  CHECK(saw_outpost);
}

TEST_CASE("disabled reduction tests never emit events") {
  Instance inst = make_k4star_with_outpost();

  SolveConfig off = quick_config(7);
  off.enable_degree = false;
  off.enable_triangle = false;
  off.enable_special_distance = false;
  off.enable_reachability = false;
  off.enable_voronoi = false;
  SolveResult untouched = solve(inst, off);
  CHECK(untouched.cost == 3);
  CHECK(untouched.reductions.events.empty());

  SolveConfig no_reach = quick_config(7);
  no_reach.enable_reachability = false;
  SolveResult r = solve(inst, no_reach);
  CHECK(r.cost == 3);
  for (const ReductionEvent& e : r.reductions.events) {
    CHECK(e.test != "reachability");
  }
  // Voronoi still catches the stranded outpost node.
  REQUIRE(r.reductions.node_removals() == 1);
  for (const ReductionEvent& e : r.reductions.events) {
    if (e.kind == ReductionKind::kNodeRemoval) CHECK(e.test == "voronoi");
  }
}

TEST_CASE("solve result JSON carries the agreed fields") {
  Instance inst = testutil::make_k4star();
  SolveResult r = solve(inst, quick_config(7));
  std::string json = result_to_json(r, "K4STAR");
  CHECK(json.find("\"name\": \"K4STAR\"") != std::string::npos);
  CHECK(json.find("\"cost\": 3") != std::string::npos);
  CHECK(json.find("\"bounds\"") != std::string::npos);
  CHECK(json.find("\"reductions\"") != std::string::npos);
  CHECK(json.find("\"time_to_best_ms\"") != std::string::npos);
}
