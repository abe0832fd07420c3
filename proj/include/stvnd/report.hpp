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
#include <vector>

#include "stvnd/solve.hpp"
#include "stvnd/steinlib.hpp"

namespace stvnd {

/// Aggregated outcome of R solver runs on one instance.
struct RunReport {
  std::string name;
  int nodes = 0;
  int edges = 0;
  int terminals = 0;
  int runs = 0;
  Cost best = 0;
  Cost worst = 0;
  double average = 0.0;
  double stdev = 0.0; // population form over the R run costs
  double avg_time_to_best_s = 0.0;
  std::optional<Cost> best_known;
  bool best_known_optimal = false;
  std::optional<double> gap_pct; // (average - best_known) / best_known * 100
  Solution best_solution;
  std::vector<SolveResult> run_results;
};

/// Benchmark-set membership for summary rows; hypercube instances belong to
/// the PUC set.
std::string test_set_of(const std::string& instance_name);

struct SetSummary {
  std::string set;
  int instances = 0;
  int optima = 0;       // runs whose best hit a proven-optimal best known
  double mean_gap = 0.0; // over instances with a known reference
  int with_gap = 0;
};

struct BenchmarkOutcome {
  std::vector<RunReport> reports;   // ordered by instance name
  std::vector<SetSummary> sets;     // ordered by set name
  std::vector<std::string> failures; // per-file parse/solve errors
};

/// Runs each instance `runs` times with seeds seed, seed+1, ... and
/// aggregates. Files that fail to parse are reported and skipped; the rest
/// still run.
BenchmarkOutcome run_benchmark(const std::vector<std::string>& stp_paths,
                               const SolveConfig& base_config, int runs,
                               const OptimaTable& optima);

/// Builds a report from per-run results already in hand (used by the oracle
/// path and tests).
RunReport aggregate_runs(const std::string& name, const Instance& instance,
                         std::vector<SolveResult> run_results,
                         const OptimaTable& optima);

/// Fixed columns name,V,E,T,best,avg,worst,time_s,gap_pct,stdev,best_known;
/// one `# set ...` comment line per test set at the end.
std::string reports_to_csv(const BenchmarkOutcome& outcome);

/// Same content as JSON: reports array, set summaries, failures.
std::string reports_to_json(const BenchmarkOutcome& outcome);

} // namespace stvnd
