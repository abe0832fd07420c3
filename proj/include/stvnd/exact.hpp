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

namespace stvnd {

/// Largest terminal set the subset DP accepts; the table grows as 3^|T|.
inline constexpr int kExactTerminalLimit = 12;

struct ExactResult {
  Cost cost = 0;
  Solution solution;
};

/// Provably minimum Steiner tree via dynamic programming over terminal
/// subsets: dp[mask][v] is the cheapest tree spanning mask plus v, built by
/// merging submask trees at v and growing along edges (one shortest-path
/// relaxation per mask). Throws InputError above kExactTerminalLimit and
/// InfeasibleError when terminals are disconnected.
ExactResult exact_steiner(const Instance& instance);

} // namespace stvnd
