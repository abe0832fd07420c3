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

// Generates the bundled benchmark fixtures:
//   e01.stp    2500 nodes / 3125 edges / 5 terminals, optimum exactly 111
//              (verified by the exact oracle before writing)
//   hc6u.stp   6-dimensional hypercube, unit weights, the 32 even-parity
//              nodes as terminals
//   hc6p.stp   same hypercube with integer weights in [100, 110]
//   path3.stp, k4star.stp  the tiny hand-checkable fixtures

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "stvnd/exact.hpp"
#include "stvnd/graph.hpp"
#include "stvnd/rng.hpp"
#include "stvnd/steinlib.hpp"

namespace {

using namespace stvnd;

constexpr int kE01Nodes = 2500;
constexpr int kE01Edges = 3125;
constexpr Cost kE01Optimum = 111;
constexpr int kPlantedPaths = 5;
constexpr int kPlantedPathLen = 8; // edges per terminal path

// Sparse graph with a planted cheap tree joining the terminals. Filler edges
// cost 6..10 so every detour around the planted paths is expensive; the
// oracle still has the final say on the optimum.
bool try_generate_e01(std::uint64_t seed, Instance& out) {
  Rng rng(seed);
  Graph g = Graph::one_based(kE01Nodes);

  std::vector<NodeId> order(kE01Nodes);
  for (int i = 0; i < kE01Nodes; ++i) order[i] = i + 1;
  for (int i = kE01Nodes - 1; i > 0; --i) {
    int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
    std::swap(order[i], order[j]);
  }
  for (int i = 1; i < kE01Nodes; ++i) {
    NodeId u = order[i];
    NodeId v = order[rng.bounded(static_cast<std::uint64_t>(i))];
    g.add_edge(u, v, rng.uniform_int(6, 10));
  }

  // Planted structure: a hub with kPlantedPaths paths of fresh random nodes,
  // terminal at the far end of each. Weights 1..4 with the last edge chosen
  // so the tree costs exactly kE01Optimum.
  std::vector<char> used(kE01Nodes + 1, 0);
  auto fresh_node = [&]() {
    for (;;) {
      NodeId v = static_cast<NodeId>(rng.uniform_int(1, kE01Nodes));
      if (!used[v]) {
        used[v] = 1;
        return v;
      }
    }
  };
  NodeId hub = fresh_node();
  std::vector<NodeId> terminals;
  std::vector<std::pair<NodeId, NodeId>> planted;
  for (int p = 0; p < kPlantedPaths; ++p) {
    NodeId prev = hub;
    for (int e = 0; e < kPlantedPathLen; ++e) {
      NodeId next = fresh_node();
      planted.emplace_back(prev, next);
      if (e == kPlantedPathLen - 1) terminals.push_back(next);
      prev = next;
    }
  }
  const int planted_edges = static_cast<int>(planted.size());
  std::vector<Cost> weights(planted_edges);
  Cost sum;
  do {
    sum = 0;
    for (int i = 0; i + 1 < planted_edges; ++i) {
      weights[i] = rng.uniform_int(1, 4);
      sum += weights[i];
    }
    weights[planted_edges - 1] = kE01Optimum - sum;
  } while (weights[planted_edges - 1] < 1 || weights[planted_edges - 1] > 4);
  for (int i = 0; i < planted_edges; ++i) {
    auto [u, v] = planted[i];
    if (g.has_edge(u, v)) return false; // rare collision with the tree
    g.add_edge(u, v, weights[i]);
  }

  while (g.live_edge_count() < kE01Edges) {
    NodeId u = static_cast<NodeId>(rng.uniform_int(1, kE01Nodes));
    NodeId v = static_cast<NodeId>(rng.uniform_int(1, kE01Nodes));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v, rng.uniform_int(6, 10));
  }

  std::sort(terminals.begin(), terminals.end());
  out = Instance::make(std::move(g), std::move(terminals));
  return true;
}

Instance generate_e01(std::uint64_t first_seed, int max_tries,
                      std::uint64_t* seed_used) {
  for (int t = 0; t < max_tries; ++t) {
    std::uint64_t seed = first_seed + static_cast<std::uint64_t>(t);
    Instance inst;
    if (!try_generate_e01(seed, inst)) continue;
    ExactResult exact = exact_steiner(inst);
    std::cerr << "e01 seed " << seed << ": optimum " << exact.cost << "\n";
    if (exact.cost == kE01Optimum) {
      *seed_used = seed;
      return inst;
    }
  }
  throw std::runtime_error("no e01 seed produced the target optimum");
}

// d-dimensional hypercube on ids 1..2^d; node i encodes bitstring i-1.
// Terminals are the even-parity half of the nodes.
Instance generate_hypercube(int dim, bool unit_weights, std::uint64_t seed) {
  Rng rng(seed);
  const int n = 1 << dim;
  Graph g = Graph::one_based(n);
  for (int code = 0; code < n; ++code) {
    for (int bit = 0; bit < dim; ++bit) {
      int other = code ^ (1 << bit);
      if (other < code) continue;
      Cost w = unit_weights ? 1 : rng.uniform_int(100, 110);
      g.add_edge(code + 1, other + 1, w);
    }
  }
  std::vector<NodeId> terminals;
  for (int code = 0; code < n; ++code) {
    if (__builtin_parity(static_cast<unsigned>(code)) == 0) {
      terminals.push_back(code + 1);
    }
  }
  return Instance::make(std::move(g), std::move(terminals));
}

Instance tiny_path3() {
  Graph g = Graph::one_based(3);
  g.add_edge(1, 2, 1);
  g.add_edge(2, 3, 1);
  return Instance::make(std::move(g), {1, 3});
}

Instance tiny_k4star() {
  Graph g = Graph::one_based(4);
  g.add_edge(1, 4, 1);
  g.add_edge(2, 4, 1);
  g.add_edge(3, 4, 1);
  g.add_edge(1, 2, 3);
  g.add_edge(2, 3, 3);
  g.add_edge(1, 3, 3);
  return Instance::make(std::move(g), {1, 2, 3});
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the bundled .stp fixtures"};
  std::string out_dir = "data";
  std::uint64_t e01_seed = 1;
  std::uint64_t hc_seed = 1;
  int max_tries = 500;
  std::string only;
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--e01-seed", e01_seed, "First seed for the e01 search");
  app.add_option("--hc-seed", hc_seed, "Weight seed for hc6p");
  app.add_option("--max-tries", max_tries, "Seed attempts for e01");
  app.add_option("--only", only, "Generate a single fixture by name");
  CLI11_PARSE(app, argc, argv);

  try {
    auto want = [&](const std::string& name) { return only.empty() || only == name; };
    if (want("path3")) {
      write_stp_file(out_dir + "/path3.stp", tiny_path3(), "PATH3");
      std::cerr << "wrote path3.stp\n";
    }
    if (want("k4star")) {
      write_stp_file(out_dir + "/k4star.stp", tiny_k4star(), "K4STAR");
      std::cerr << "wrote k4star.stp\n";
    }
    if (want("hc6u")) {
      write_stp_file(out_dir + "/hc6u.stp", generate_hypercube(6, true, hc_seed),
                     "HC6U");
      std::cerr << "wrote hc6u.stp\n";
    }
    if (want("hc6p")) {
      write_stp_file(out_dir + "/hc6p.stp", generate_hypercube(6, false, hc_seed),
                     "HC6P");
      std::cerr << "wrote hc6p.stp\n";
    }
    if (want("e01")) {
      std::uint64_t used = 0;
      Instance e01 = generate_e01(e01_seed, max_tries, &used);
      write_stp_file(out_dir + "/e01.stp", e01, "E01");
      std::cerr << "wrote e01.stp (seed " << used << ")\n";
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
