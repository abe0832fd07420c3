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

#include "stvnd/scores.hpp"

#include <algorithm>

namespace stvnd {

void ScoreTable::History::push(int value) {
  if (size == kWindow) {
    sum -= ring[head];
  } else {
    ++size;
  }
  ring[head] = value;
  sum += value;
  head = (head + 1) % kWindow;
}

void ScoreTable::History::reset(int value) {
  ring.fill(0);
  ring[0] = value;
  size = 1;
  head = 1 % kWindow;
  sum = value;
}

ScoreTable::ScoreTable(const Instance& instance, ScoreParams params,
                       ScoreWindow window)
    : params_(params), window_(window) {
  int n = instance.graph.capacity();
  score_.assign(n, 0);
  terminal_.assign(n, 0);
  history_.resize(n);
  for (NodeId v = 0; v < n; ++v) history_[v].reset(0);
  for (NodeId t : instance.terminals) {
    terminal_[t] = 1;
    score_[t] = params_.score_max;
    history_[t].reset(params_.score_max);
  }
}

void ScoreTable::bump(NodeId v, int delta) {
  if (v < 0 || v >= static_cast<int>(score_.size()) || terminal_[v]) return;
  score_[v] += delta;
  if (window_ == ScoreWindow::kPerNodeUpdates) history_[v].push(score_[v]);
}

void ScoreTable::record_outcome(std::span<const NodeId> nodes, bool improved) {
  int delta = improved ? params_.reward : -params_.penalty;
  for (NodeId v : nodes) bump(v, delta);
}

void ScoreTable::restart(Rng& rng) {
  for (NodeId v = 0; v < static_cast<int>(score_.size()); ++v) {
    if (terminal_[v]) continue;
    int fresh = static_cast<int>(rng.uniform_int(params_.restart_lo, params_.restart_hi));
    score_[v] = fresh;
    history_[v].reset(fresh);
  }
  ++restarts_;
}

void ScoreTable::advance_iteration() {
  if (window_ != ScoreWindow::kGlobalIterations) return;
  for (NodeId v = 0; v < static_cast<int>(score_.size()); ++v) {
    if (!terminal_[v]) history_[v].push(score_[v]);
  }
}

int ScoreTable::current_score(NodeId v) const { return score_[v]; }

double ScoreTable::average_score(NodeId v) const {
  if (terminal_[v]) return params_.score_max;
  const History& h = history_[v];
  return h.size == 0 ? 0.0 : static_cast<double>(h.sum) / h.size;
}

bool ScoreTable::avg_greater(NodeId a, NodeId b) const {
  long long sum_a = terminal_[a] ? params_.score_max : history_[a].sum;
  long long len_a = terminal_[a] ? 1 : std::max(history_[a].size, 1);
  long long sum_b = terminal_[b] ? params_.score_max : history_[b].sum;
  long long len_b = terminal_[b] ? 1 : std::max(history_[b].size, 1);
  return sum_a * len_b > sum_b * len_a;
}

std::vector<NodeId> ScoreTable::top_scored(std::span<const NodeId> candidates,
                                           int k) const {
  std::vector<NodeId> out(candidates.begin(), candidates.end());
  std::sort(out.begin(), out.end(), [this](NodeId a, NodeId b) {
    if (avg_greater(a, b)) return true;
    if (avg_greater(b, a)) return false;
    return a < b;
  });
  if (k < static_cast<int>(out.size())) out.resize(std::max(k, 0));
  return out;
}

} // namespace stvnd
