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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stvnd/exact.hpp"
#include "stvnd/report.hpp"
#include "stvnd/solve.hpp"

namespace {

std::vector<std::string> collect_stp_files(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".stp") {
      out.push_back(entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int run_oracle(const std::string& path) {
  stvnd::ParsedInstance parsed = stvnd::parse_stp_file(path);
  stvnd::ExactResult r = stvnd::exact_steiner(parsed.instance);
  std::cout << parsed.name << " optimum " << r.cost << "\n";
  for (const stvnd::Edge& e : r.solution.edges) {
    std::cout << "E " << e.u << " " << e.v << " " << e.cost << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner tree solver: reductions plus variable neighborhood descent"};

  std::string instance_path;
  std::string dir_path;
  int runs = 8;
  std::uint64_t seed = 1;
  double time_limit = 30.0;
  int bmin = 1;
  int bmax = 256;
  int restarts = -1;
  int sd_cap = 10;
  bool deterministic = false;
  std::vector<std::string> no_reduce;
  bool oracle = false;
  std::string emit = "csv";
  std::string optima_path;
  stvnd::Cost target = -1;

  app.add_option("--instance", instance_path, "Single .stp instance to solve");
  app.add_option("--dir", dir_path, "Directory of .stp instances");
  app.add_option("--runs", runs, "Runs per instance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Base seed; run r uses seed+r");
  app.add_option("--time-limit", time_limit, "Per-run time limit in seconds");
  app.add_option("--bmin", bmin, "Smallest neighborhood size");
  app.add_option("--bmax", bmax, "Largest neighborhood size");
  app.add_option("--restarts", restarts,
                 "Outer restarts after VND exhaustion; -1 = until time limit");
  app.add_option("--sd-cap", sd_cap, "Nearest terminals per node in the "
                                     "special-distance test");
  app.add_flag("--deterministic", deterministic,
               "Round-counter clock and capped restarts for reproducible output");
  app.add_option("--no-reduce", no_reduce,
                 "Disable a reduction test (degree, triangle, special_distance, "
                 "reachability, voronoi); repeatable");
  app.add_flag("--oracle", oracle, "Solve exactly (needs few terminals)");
  app.add_option("--emit", emit, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--optima", optima_path, "CSV of best-known costs");
  app.add_option("--target", target, "Stop a run once this cost is reached");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (instance_path.empty() == dir_path.empty()) {
    std::cerr << "exactly one of --instance or --dir is required\n";
    return 2;
  }

  const std::set<std::string> known_tests{
      "degree", "triangle", "special_distance", "reachability", "voronoi"};
  for (const std::string& t : no_reduce) {
    if (!known_tests.count(t)) {
      std::cerr << "unknown reduction test: " << t << "\n";
      return 2;
    }
  }

  try {
    if (oracle) {
      if (instance_path.empty()) {
        std::cerr << "--oracle needs --instance\n";
        return 2;
      }
      return run_oracle(instance_path);
    }

    stvnd::SolveConfig cfg;
    cfg.seed = seed;
    cfg.time_limit_s = time_limit;
    cfg.deterministic = deterministic;
    cfg.max_outer_restarts = restarts;
    cfg.sd_cap = sd_cap;
    cfg.vnd.b_min = bmin;
    cfg.vnd.b_max = bmax;
    if (target >= 0) cfg.target_cost = target;
    for (const std::string& t : no_reduce) {
      if (t == "degree") cfg.enable_degree = false;
      if (t == "triangle") cfg.enable_triangle = false;
      if (t == "special_distance") cfg.enable_special_distance = false;
      if (t == "reachability") cfg.enable_reachability = false;
      if (t == "voronoi") cfg.enable_voronoi = false;
    }

    stvnd::OptimaTable optima;
    if (!optima_path.empty()) optima = stvnd::OptimaTable::from_csv_file(optima_path);

    std::vector<std::string> paths;
    if (!instance_path.empty()) {
      paths.push_back(instance_path);
    } else {
      paths = collect_stp_files(dir_path);
      if (paths.empty()) {
        std::cerr << "no .stp files under " << dir_path << "\n";
        return 2;
      }
    }

    if (!instance_path.empty() && runs == 1 && emit == "json") {
      // Single-run JSON keeps the full result record, bounds included; the
      // determinism check compares this output byte for byte.
      stvnd::ParsedInstance parsed = stvnd::parse_stp_file(instance_path);
      stvnd::SolveResult result = stvnd::solve(parsed.instance, cfg);
      std::cout << stvnd::result_to_json(result, parsed.name);
      return 0;
    }

    stvnd::BenchmarkOutcome outcome = stvnd::run_benchmark(paths, cfg, runs, optima);
    if (emit == "json") {
      std::cout << stvnd::reports_to_json(outcome);
    } else {
      std::cout << stvnd::reports_to_csv(outcome);
    }
    if (!outcome.failures.empty()) {
      for (const std::string& f : outcome.failures) std::cerr << f << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
