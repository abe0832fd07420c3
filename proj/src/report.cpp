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

#include "stvnd/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace stvnd {

std::string test_set_of(const std::string& instance_name) {
  std::string prefix;
  for (char c : instance_name) {
    if (!std::isalpha(static_cast<unsigned char>(c))) break;
    prefix.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (prefix == "HC" || prefix == "CC" || prefix == "BIP" || prefix == "BIPE" ||
      prefix == "HANOI") {
    return "PUC";
  }
  return prefix.empty() ? "?" : prefix;
}

namespace {

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

} // namespace

RunReport aggregate_runs(const std::string& name, const Instance& instance,
                         std::vector<SolveResult> run_results,
                         const OptimaTable& optima) {
  RunReport r;
  r.name = name;
  r.nodes = instance.graph.live_node_count();
  r.edges = instance.graph.live_edge_count();
  r.terminals = instance.terminal_count();
  r.runs = static_cast<int>(run_results.size());
  if (run_results.empty()) return r;

  r.best = run_results[0].cost;
  r.worst = run_results[0].cost;
  double sum = 0.0;
  double time_sum = 0.0;
  for (std::size_t i = 0; i < run_results.size(); ++i) {
    Cost c = run_results[i].cost;
    sum += static_cast<double>(c);
    time_sum += static_cast<double>(run_results[i].time_to_best_ms) / 1000.0;
    if (c < r.best) {
      r.best = c;
      r.best_solution = run_results[i].best;
    } else if (i == 0) {
      r.best_solution = run_results[i].best;
    }
    r.worst = std::max(r.worst, c);
  }
  r.average = sum / r.runs;
  double var = 0.0;
  for (const SolveResult& res : run_results) {
    double d = static_cast<double>(res.cost) - r.average;
    var += d * d;
  }
  r.stdev = std::sqrt(var / r.runs);
  r.avg_time_to_best_s = time_sum / r.runs;

  if (auto entry = optima.lookup(name)) {
    r.best_known = entry->cost;
    r.best_known_optimal = entry->proven_optimal;
    r.gap_pct = gap_percent(r.average, static_cast<double>(entry->cost));
  }
  r.run_results = std::move(run_results);
  return r;
}

namespace {

std::vector<SetSummary> summarize(const std::vector<RunReport>& reports) {
  std::map<std::string, SetSummary> by_set;
  for (const RunReport& r : reports) {
    SetSummary& s = by_set[test_set_of(r.name)];
    s.set = test_set_of(r.name);
    ++s.instances;
    if (r.best_known && r.best_known_optimal && r.best == *r.best_known) {
      ++s.optima;
    }
    if (r.gap_pct) {
      s.mean_gap += *r.gap_pct;
      ++s.with_gap;
    }
  }
  std::vector<SetSummary> out;
  for (auto& [name, s] : by_set) {
    if (s.with_gap > 0) s.mean_gap /= s.with_gap;
    out.push_back(std::move(s));
  }
  return out;
}

std::string base_name(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string file = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = file.find_last_of('.');
  if (dot != std::string::npos) file = file.substr(0, dot);
  return file;
}

} // namespace

BenchmarkOutcome run_benchmark(const std::vector<std::string>& stp_paths,
                               const SolveConfig& base_config, int runs,
                               const OptimaTable& optima) {
  BenchmarkOutcome out;
  for (const std::string& path : stp_paths) {
    ParsedInstance parsed;
    try {
      parsed = parse_stp_file(path);
    } catch (const std::exception& ex) {
      out.failures.push_back(path + ": " + ex.what());
      continue;
    }
    std::string name = parsed.name.empty() ? base_name(path) : parsed.name;
    std::vector<SolveResult> results;
    try {
      for (int r = 0; r < runs; ++r) {
        SolveConfig cfg = base_config;
        cfg.seed = base_config.seed + static_cast<std::uint64_t>(r);
        results.push_back(solve(parsed.instance, cfg));
      }
    } catch (const std::exception& ex) {
      out.failures.push_back(path + ": " + ex.what());
      continue;
    }
    out.reports.push_back(
        aggregate_runs(name, parsed.instance, std::move(results), optima));
  }
  std::sort(out.reports.begin(), out.reports.end(),
            [](const RunReport& a, const RunReport& b) { return a.name < b.name; });
  out.sets = summarize(out.reports);
  return out;
}

std::string reports_to_csv(const BenchmarkOutcome& outcome) {
  std::ostringstream os;
  os << "name,V,E,T,best,avg,worst,time_s,gap_pct,stdev,best_known\n";
  for (const RunReport& r : outcome.reports) {
    os << r.name << "," << r.nodes << "," << r.edges << "," << r.terminals << ","
       << r.best << "," << fmt2(r.average) << "," << r.worst << ","
       << fmt2(r.avg_time_to_best_s) << ",";
    if (r.gap_pct) os << fmt2(*r.gap_pct);
    os << "," << fmt2(r.stdev) << ",";
    if (r.best_known) os << *r.best_known;
    os << "\n";
  }
  for (const SetSummary& s : outcome.sets) {
    os << "# set " << s.set << ": instances=" << s.instances
       << " optima=" << s.optima << " mean_gap=" << fmt2(s.mean_gap) << "\n";
  }
  for (const std::string& f : outcome.failures) {
    os << "# failure " << f << "\n";
  }
  return os.str();
}

std::string reports_to_json(const BenchmarkOutcome& outcome) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const RunReport& r : outcome.reports) {
    nlohmann::ordered_json e;
    e["name"] = r.name;
    e["V"] = r.nodes;
    e["E"] = r.edges;
    e["T"] = r.terminals;
    e["runs"] = r.runs;
    e["best"] = r.best;
    e["avg"] = round2(r.average);
    e["worst"] = r.worst;
    e["time_s"] = round2(r.avg_time_to_best_s);
    if (r.gap_pct) {
      e["gap_pct"] = round2(*r.gap_pct);
    } else {
      e["gap_pct"] = nullptr;
    }
    e["stdev"] = round2(r.stdev);
    if (r.best_known) {
      e["best_known"] = *r.best_known;
      e["best_known_optimal"] = r.best_known_optimal;
    } else {
      e["best_known"] = nullptr;
    }
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const SolveResult& res : r.run_results) {
      nlohmann::ordered_json run;
      run["cost"] = res.cost;
      run["time_to_best_ms"] = res.time_to_best_ms;
      run["total_ms"] = res.total_ms;
      nlohmann::ordered_json bounds = nlohmann::ordered_json::array();
      for (const BoundRecord& b : res.bounds) {
        bounds.push_back({{"cost", b.cost}, {"at_ms", b.at_ms}});
      }
      run["bounds"] = std::move(bounds);
      run["node_removals"] = res.reductions.node_removals();
      run["edge_removals"] = res.reductions.edge_removals();
      runs.push_back(std::move(run));
    }
    e["run_details"] = std::move(runs);
    reports.push_back(std::move(e));
  }
  j["reports"] = std::move(reports);
  nlohmann::ordered_json sets = nlohmann::ordered_json::array();
  for (const SetSummary& s : outcome.sets) {
    sets.push_back({{"set", s.set},
                    {"instances", s.instances},
                    {"optima", s.optima},
                    {"mean_gap", round2(s.mean_gap)}});
  }
  j["sets"] = std::move(sets);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const std::string& f : outcome.failures) failures.push_back(f);
  j["failures"] = std::move(failures);
  return j.dump(2) + "\n";
}

} // namespace stvnd
