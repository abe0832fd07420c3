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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "stvnd/graph.hpp"
#include "stvnd/rng.hpp"

namespace stvnd {

struct ScoreParams {
  int score_max = 1000; // terminals sit here, immutably
  int reward = 1;
  int penalty = 1;
  int restart_lo = -5;
  int restart_hi = 5;
};

/// How the 10-slot history window advances. kPerNodeUpdates records a value
/// only when that node's score changes; kGlobalIterations snapshots every
/// node once per advance_iteration() call.
enum class ScoreWindow {
  kPerNodeUpdates,
  kGlobalIterations,
};

/// Per-node preference scores. Terminals are pinned at score_max; everyone
/// else accumulates +/-1 outcomes. Rankings use the average of each node's
/// most recent window, not the instantaneous value.
class ScoreTable {
 public:
  static constexpr int kWindow = 10;

  ScoreTable() = default;
  ScoreTable(const Instance& instance, ScoreParams params,
             ScoreWindow window = ScoreWindow::kPerNodeUpdates);

  /// improved: +reward to each listed non-terminal; otherwise -penalty.
  void record_outcome(std::span<const NodeId> nodes, bool improved);

  /// Non-terminal scores re-drawn uniformly from [restart_lo, restart_hi],
  /// histories reset to the fresh value. Terminals untouched.
  void restart(Rng& rng);
  int restart_count() const { return restarts_; }

  /// No-op under kPerNodeUpdates. Under kGlobalIterations, pushes every
  /// non-terminal node's current score into its window.
  void advance_iteration();

  int current_score(NodeId v) const;
  /// Window average times an exact denominator, for float-free compares.
  /// Terminals report score_max regardless of history.
  double average_score(NodeId v) const;

  /// Candidates sorted by descending window average (exact compare), ties by
  /// ascending id; first min(k, |candidates|) returned.
  std::vector<NodeId> top_scored(std::span<const NodeId> candidates, int k) const;

  bool is_terminal(NodeId v) const { return terminal_[v] != 0; }
  const ScoreParams& params() const { return params_; }

 private:
  struct History {
    std::array<int, kWindow> ring{};
    int size = 0;
    int head = 0; // next write slot
    long long sum = 0;

    void push(int value);
    void reset(int value);
  };

  void bump(NodeId v, int delta);
  // avg(a) > avg(b) without division: cross-multiplied sums.
  bool avg_greater(NodeId a, NodeId b) const;

  ScoreParams params_;
  ScoreWindow window_ = ScoreWindow::kPerNodeUpdates;
  std::vector<int> score_;
  std::vector<char> terminal_;
  std::vector<History> history_;
  int restarts_ = 0;
};

} // namespace stvnd
