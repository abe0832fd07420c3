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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stvnd/graph.hpp"
#include "stvnd/reduce.hpp"
#include "stvnd/scores.hpp"
#include "stvnd/vnd.hpp"

namespace stvnd {

struct SolveConfig {
  VndParams vnd;
  ScoreParams score;
  ScoreWindow score_window = ScoreWindow::kPerNodeUpdates;
  std::uint64_t seed = 1;
  double time_limit_s = 30.0;
  /// Replaces wall-clock time with a round counter and caps the outer
  /// restarts, so identical runs produce identical results byte for byte.
  bool deterministic = false;
  /// Extra descents after VND exhaustion; -1 means unlimited in timed mode
  /// and 2 in deterministic mode.
  int max_outer_restarts = -1;
  /// Stop as soon as the incumbent reaches this cost.
  std::optional<Cost> target_cost;

  bool enable_degree = true;
  bool enable_triangle = true;
  bool enable_special_distance = true;
  bool enable_reachability = true;
  bool enable_voronoi = true;
  int sd_cap = 10;
};

/// Tracks the incumbent cost and schedules one bound-test round per strict
/// improvement.
class BoundScheduler {
 public:
  /// Returns true when cost strictly beats the current best; the new bound
  /// is then queued for the reduction tests.
  bool submit(Cost cost);
  std::optional<Cost> take_scheduled();
  std::optional<Cost> best() const { return best_; }
  int scheduled_rounds() const { return scheduled_rounds_; }

 private:
  std::optional<Cost> best_;
  std::optional<Cost> pending_;
  int scheduled_rounds_ = 0;
};

struct BoundRecord {
  Cost cost;
  std::int64_t at_ms; // round ticks in deterministic mode
};

struct SolveResult {
  Solution best;
  Cost cost = 0;
  std::int64_t time_to_best_ms = 0;
  std::int64_t total_ms = 0;
  ReductionLog reductions;
  std::vector<BoundRecord> bounds;
  /// Solution behind each bound, kept so audits can re-validate the whole
  /// history against the original instance.
  std::vector<Solution> bound_solutions;
  std::int64_t reduce_ms = 0;
  std::int64_t construct_ms = 0;
  std::int64_t vnd_ms = 0;
  int rounds = 0;
  int bound_reduction_rounds = 0;
  int outer_restarts = 0;
  bool hit_time_limit = false;
};

/// Full pipeline: degree pass, initial construction (publishing the first
/// bound), then VND rounds with the remaining reduction tests interleaved at
/// round boundaries. Every removal the solver's view receives while a bound
/// test is in force is checked against the incumbent.
SolveResult solve(const Instance& instance, const SolveConfig& config);

/// JSON form of a result: name, cost, edges, time_to_best_ms, bounds[],
/// reduction summary. Stable field order; byte-identical for identical
/// results.
std::string result_to_json(const SolveResult& result, const std::string& name);

} // namespace stvnd
