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

#include "stvnd/solve.hpp"

#include <chrono>
#include <map>

#include "json.hpp"
#include "stvnd/construct.hpp"

namespace stvnd {

namespace {

/// Wall clock in timed mode; a round counter in deterministic mode, so every
/// reported duration is reproducible.
class SolveClock {
 public:
  explicit SolveClock(bool deterministic)
      : deterministic_(deterministic),
        start_(std::chrono::steady_clock::now()) {}

  std::int64_t now_ms() const {
    if (deterministic_) return ticks_;
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

  void tick() { ++ticks_; }

  bool expired(double limit_s) const {
    if (deterministic_) return false;
    return static_cast<double>(now_ms()) >= limit_s * 1000.0;
  }

 private:
  bool deterministic_;
  std::chrono::steady_clock::time_point start_;
  std::int64_t ticks_ = 0;
};

/// The solver's view plus any incumbent edges earlier edge tests removed.
/// Bound tests run here: distances through the incumbent stay visible, which
/// keeps its nodes provably immune to removal.
Instance world_with_incumbent(const Instance& view, const Solution& incumbent) {
  Graph g = view.graph;
  for (const Edge& e : incumbent.edges) {
    if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v, e.cost);
  }
  return Instance::make(std::move(g), view.terminals);
}

} // namespace

bool BoundScheduler::submit(Cost cost) {
  if (best_ && cost >= *best_) return false;
  best_ = cost;
  pending_ = cost;
  ++scheduled_rounds_;
  return true;
}

std::optional<Cost> BoundScheduler::take_scheduled() {
  std::optional<Cost> out = pending_;
  pending_.reset();
  return out;
}

SolveResult solve(const Instance& instance, const SolveConfig& config) {
  if (config.time_limit_s <= 0) {
    throw InputError("solve: time limit must be positive");
  }
  SolveClock clock(config.deterministic);
  SolveResult result;
  Instance work = instance;
  Rng rng(config.seed);

  // Phase 1: the cheap degree pass before anything else.
  if (config.enable_degree) {
    std::vector<ReductionEvent> ev = reduce_degree(work);
    apply_events(work.graph, ev);
    result.reductions.append(std::move(ev));
  }
  result.reduce_ms = clock.now_ms();

  // Phase 2: initial solution; its cost is the first published bound.
  InitialResult initial = initial_solution(work);
  result.best = initial.solution;
  result.cost = result.best.cost;
  result.construct_ms = clock.now_ms() - result.reduce_ms;

  BoundScheduler scheduler;
  scheduler.submit(result.best.cost);
  result.bounds.push_back({result.best.cost, clock.now_ms()});
  result.bound_solutions.push_back(result.best);
  result.time_to_best_ms = clock.now_ms();

  // Phase 3: VND with the remaining tests at round boundaries.
  ScoreTable scores(work, config.score, config.score_window);
  bool edge_tests_pending = config.enable_triangle || config.enable_special_distance;
  bool stop = false;

  auto at_target = [&] {
    return config.target_cost && result.best.cost <= *config.target_cost;
  };

  auto run_bound_tests = [&](Cost bound) {
    Instance bound_world = world_with_incumbent(work, result.best);
    std::vector<ReductionEvent> ev;
    if (config.enable_reachability) {
      std::vector<ReductionEvent> r = reduce_reachability(bound_world, bound);
      for (auto& e : r) ev.push_back(std::move(e));
    }
    if (config.enable_voronoi) {
      // Reachability removals first, so the Voronoi pass sees them.
      Instance after = bound_world;
      apply_events(after.graph, ev);
      std::vector<ReductionEvent> r = reduce_voronoi(after, bound);
      for (auto& e : r) ev.push_back(std::move(e));
    }
    for (const ReductionEvent& e : ev) {
      if (e.kind == ReductionKind::kNodeRemoval &&
          result.best.contains_node(e.node)) {
        throw std::logic_error("bound-based reduction removed incumbent node " +
                               std::to_string(e.node));
      }
    }
    apply_events(work.graph, ev);
    result.reductions.append(std::move(ev));
    ++result.bound_reduction_rounds;
  };

  VndHooks hooks;
  hooks.publish = [&](Cost cost, const Solution& sol) {
    if (!scheduler.submit(cost)) return;
    result.best = sol;
    result.cost = cost;
    result.bounds.push_back({cost, clock.now_ms()});
    result.bound_solutions.push_back(sol);
    result.time_to_best_ms = clock.now_ms();
  };
  hooks.round_boundary = [&]() -> bool {
    if (at_target()) {
      stop = true;
      return false;
    }
    if (clock.expired(config.time_limit_s)) {
      stop = true;
      result.hit_time_limit = true;
      return false;
    }
    if (edge_tests_pending) {
      edge_tests_pending = false;
      if (work.terminal_count() >= 2) {
        if (config.enable_triangle) {
          TmstData tmst = build_tmst(work);
          std::vector<ReductionEvent> ev = reduce_triangle(work, tmst);
          apply_events(work.graph, ev);
          result.reductions.append(std::move(ev));
        }
        if (config.enable_special_distance) {
          std::vector<ReductionEvent> ev =
              reduce_special_distance(work, config.sd_cap);
          apply_events(work.graph, ev);
          result.reductions.append(std::move(ev));
        }
      }
    }
    if (std::optional<Cost> bound = scheduler.take_scheduled()) {
      run_bound_tests(*bound);
    }
    ++result.rounds;
    clock.tick();
    return true;
  };

  int restart_cap = config.max_outer_restarts;
  if (restart_cap < 0) restart_cap = config.deterministic ? 2 : -1;

  std::int64_t vnd_start = clock.now_ms();
  for (int descent = 0;; ++descent) {
    if (stop || at_target() || clock.expired(config.time_limit_s)) break;
    if (descent > 0) {
      if (restart_cap >= 0 && descent > restart_cap) break;
      scores.restart(rng);
      result.outer_restarts = descent;
    }
    Solution found = vnd_descent(work, result.best, config.vnd, scores, rng, hooks);
    // vnd_descent already published every strict improvement; `found` can
    // only confirm the incumbent.
    if (found.cost < result.best.cost) {
      throw std::logic_error("descent result bypassed the bound stream");
    }
    if (restart_cap >= 0 && descent >= restart_cap) break;
  }
  result.vnd_ms = clock.now_ms() - vnd_start;
  if (clock.expired(config.time_limit_s)) result.hit_time_limit = true;

  result.total_ms = clock.now_ms();
  return result;
}

std::string result_to_json(const SolveResult& result, const std::string& name) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["cost"] = result.cost;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const Edge& e : result.best.edges) {
    edges.push_back({e.u, e.v, e.cost});
  }
  j["edges"] = std::move(edges);
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (NodeId v : result.best.nodes) nodes.push_back(v);
  j["nodes"] = std::move(nodes);
  j["time_to_best_ms"] = result.time_to_best_ms;
  j["total_ms"] = result.total_ms;
  nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
  for (const BoundRecord& b : result.bounds) {
    bounds.push_back({{"cost", b.cost}, {"at_ms", b.at_ms}});
  }
  j["bounds"] = std::move(bounds);

  std::map<std::string, int> by_test;
  for (const ReductionEvent& e : result.reductions.events) ++by_test[e.test];
  nlohmann::ordered_json red;
  red["node_removals"] = result.reductions.node_removals();
  red["edge_removals"] = result.reductions.edge_removals();
  nlohmann::ordered_json per_test;
  for (const auto& [test, count] : by_test) per_test[test] = count;
  red["by_test"] = std::move(per_test);
  j["reductions"] = std::move(red);
  j["rounds"] = result.rounds;
  j["bound_reduction_rounds"] = result.bound_reduction_rounds;
  j["outer_restarts"] = result.outer_restarts;
  return j.dump(2) + "\n";
}

} // namespace stvnd
