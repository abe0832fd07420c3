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

#include "stvnd/steinlib.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace stvnd {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'", line);
  }
}

constexpr const char* kMagic = "33d32945 stp file, stp format version 1.0";

struct RawEdge {
  NodeId u, v;
  Cost cost;
  int line;
};

} // namespace

ParsedInstance parse_stp(std::istream& in) {
  ParsedInstance out;
  std::string raw;
  int lineno = 0;

  auto next_line = [&](std::string& s) {
    while (std::getline(in, raw)) {
      ++lineno;
      s = trim(raw);
      if (!s.empty()) return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw ParseError("empty file", 1);
  if (lower(line) != kMagic) throw ParseError("missing STP magic header", lineno);

  int nodes = 0, edges = 0, terms = 0;
  bool have_nodes = false;
  bool have_edge_count = false;
  bool have_term_count = false;
  std::vector<RawEdge> raw_edges;
  std::vector<NodeId> terminals;
  std::vector<int> terminal_lines;
  bool saw_eof = false;
  bool saw_graph = false;
  bool saw_terminals = false;

  while (next_line(line)) {
    std::string low = lower(line);
    if (low == "eof") {
      saw_eof = true;
      break;
    }
    auto tok = tokens(line);
    if (lower(tok[0]) != "section") {
      throw ParseError("expected SECTION or EOF, got '" + tok[0] + "'", lineno);
    }
    if (tok.size() < 2) throw ParseError("SECTION without a name", lineno);
    std::string section = lower(tok[1]);

    bool ended = false;
    while (next_line(line)) {
      if (lower(line) == "end") {
        ended = true;
        break;
      }
      auto t = tokens(line);
      std::string key = lower(t[0]);
      if (section == "comment") {
        if (key == "name" && t.size() >= 2) {
          // Name "foo bar" -> strip surrounding quotes if present.
          std::string rest = trim(line.substr(line.find(t[0]) + t[0].size()));
          if (rest.size() >= 2 && rest.front() == '"' && rest.back() == '"') {
            rest = rest.substr(1, rest.size() - 2);
          }
          out.name = rest;
        }
        // Creator / Remark / Problem lines are informational; skip.
      } else if (section == "graph") {
        saw_graph = true;
        if (key == "nodes") {
          if (t.size() != 2) throw ParseError("Nodes expects one count", lineno);
          long long n = parse_int(t[1], lineno, "node count");
          if (n < 0) throw ParseError("negative node count", lineno);
          nodes = static_cast<int>(n);
          have_nodes = true;
        } else if (key == "edges" || key == "arcs") {
          if (t.size() != 2) throw ParseError("Edges expects one count", lineno);
          edges = static_cast<int>(parse_int(t[1], lineno, "edge count"));
          have_edge_count = true;
        } else if (key == "e" || key == "a") {
          if (t.size() != 4) {
            throw ParseError("E expects two endpoints and a cost", lineno);
          }
          if (!have_nodes) throw ParseError("E before Nodes", lineno);
          long long u = parse_int(t[1], lineno, "endpoint");
          long long v = parse_int(t[2], lineno, "endpoint");
          long long c = parse_int(t[3], lineno, "edge cost");
          if (u < 1 || u > nodes || v < 1 || v > nodes) {
            throw ParseError("edge endpoint out of range 1.." + std::to_string(nodes),
                             lineno);
          }
          if (c < 0) throw ParseError("negative edge cost", lineno);
          if (have_edge_count && static_cast<int>(raw_edges.size()) >= edges) {
            throw ParseError("more E lines than the declared " +
                                 std::to_string(edges),
                             lineno);
          }
          raw_edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v),
                               static_cast<Cost>(c), lineno});
        } else {
          throw ParseError("unknown Graph line '" + t[0] + "'", lineno);
        }
      } else if (section == "terminals") {
        saw_terminals = true;
        if (key == "terminals") {
          if (t.size() != 2) throw ParseError("Terminals expects one count", lineno);
          terms = static_cast<int>(parse_int(t[1], lineno, "terminal count"));
          have_term_count = true;
        } else if (key == "t") {
          if (t.size() != 2) throw ParseError("T expects one node id", lineno);
          long long v = parse_int(t[1], lineno, "terminal id");
          if (!have_nodes || v < 1 || v > nodes) {
            throw ParseError("terminal out of range", lineno);
          }
          if (have_term_count && static_cast<int>(terminals.size()) >= terms) {
            throw ParseError("more T lines than the declared " +
                                 std::to_string(terms),
                             lineno);
          }
          terminals.push_back(static_cast<NodeId>(v));
          terminal_lines.push_back(lineno);
        } else {
          throw ParseError("unknown Terminals line '" + t[0] + "'", lineno);
        }
      } else {
        // Unknown sections (Coordinates, MaximumDegrees, ...) are skipped.
      }
    }
    if (!ended) throw ParseError("section '" + section + "' not closed by END", lineno);
  }

  if (!saw_eof) throw ParseError("missing EOF", lineno);
  if (!saw_graph || !have_nodes) throw ParseError("missing Graph section", lineno);
  if (!saw_terminals) throw ParseError("missing Terminals section", lineno);
  if (edges != static_cast<int>(raw_edges.size())) {
    throw ParseError("Edges declares " + std::to_string(edges) + " but " +
                         std::to_string(raw_edges.size()) + " E lines found",
                     lineno);
  }
  if (terms != static_cast<int>(terminals.size())) {
    throw ParseError("Terminals declares " + std::to_string(terms) + " but " +
                         std::to_string(terminals.size()) + " T lines found",
                     lineno);
  }
  if (terminals.empty()) throw ParseError("instance has no terminals", lineno);

  out.declared_nodes = nodes;
  out.declared_edges = edges;
  out.declared_terminals = terms;

  Graph g = Graph::one_based(nodes);
  for (const RawEdge& e : raw_edges) {
    if (e.u == e.v) {
      out.warnings.push_back({e.line, "dropped self-loop on node " +
                                          std::to_string(e.u)});
      continue;
    }
    if (std::optional<Cost> old = g.edge_cost(e.u, e.v)) {
      out.warnings.push_back(
          {e.line, "parallel edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " collapsed to cheaper cost"});
      if (e.cost < *old) {
        g.remove_edge(e.u, e.v);
        g.add_edge(e.u, e.v, e.cost);
      }
      continue;
    }
    g.add_edge(e.u, e.v, e.cost);
  }

  {
    std::vector<NodeId> sorted = terminals;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) {
        throw ParseError("duplicate terminal " + std::to_string(sorted[i]),
                         terminal_lines.back());
      }
    }
  }

  out.instance = Instance::make(std::move(g), std::move(terminals));
  return out;
}

ParsedInstance parse_stp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_stp(in);
}

void write_stp(std::ostream& out, const Instance& instance, const std::string& name) {
  const Graph& g = instance.graph;
  // Live ids must form 1..n for the round trip to preserve ids.
  std::vector<NodeId> nodes = g.live_nodes();
  int n = nodes.empty() ? 0 : nodes.back();
  if (static_cast<int>(nodes.size()) != n || (n > 0 && nodes.front() != 1)) {
    throw InputError("write_stp: live node ids are not contiguous from 1");
  }
  std::vector<Edge> edges = g.live_edges();

  out << "33D32945 STP File, STP Format Version 1.0\n\n";
  out << "SECTION Comment\n";
  out << "Name    \"" << name << "\"\n";
  out << "END\n\n";
  out << "SECTION Graph\n";
  out << "Nodes " << n << "\n";
  out << "Edges " << edges.size() << "\n";
  for (const Edge& e : edges) {
    out << "E " << e.u << " " << e.v << " " << e.cost << "\n";
  }
  out << "END\n\n";
  out << "SECTION Terminals\n";
  out << "Terminals " << instance.terminals.size() << "\n";
  for (NodeId t : instance.terminals) out << "T " << t << "\n";
  out << "END\n\n";
  out << "EOF\n";
}

void write_stp_file(const std::string& path, const Instance& instance,
                    const std::string& name) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path + " for writing");
  write_stp(out, instance, name);
}

void write_solution(std::ostream& out, const Solution& solution,
                    const std::string& name) {
  out << "NAME " << name << "\n";
  out << "COST " << solution.cost << "\n";
  out << "EDGES " << solution.edges.size() << "\n";
  for (const Edge& e : solution.edges) {
    out << "E " << e.u << " " << e.v << "\n";
  }
  out << "END\n";
}

Solution parse_solution(std::istream& in, const Instance& instance) {
  std::string line;
  int lineno = 0;
  std::vector<Edge> edges;
  std::optional<Cost> declared_cost;
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty()) continue;
    auto t = tokens(s);
    std::string key = lower(t[0]);
    if (key == "name") continue;
    if (key == "cost") {
      if (t.size() != 2) throw ParseError("COST expects one value", lineno);
      declared_cost = static_cast<Cost>(parse_int(t[1], lineno, "cost"));
    } else if (key == "edges") {
      // count is advisory
    } else if (key == "e") {
      if (t.size() != 3) throw ParseError("E expects two endpoints", lineno);
      NodeId u = static_cast<NodeId>(parse_int(t[1], lineno, "endpoint"));
      NodeId v = static_cast<NodeId>(parse_int(t[2], lineno, "endpoint"));
      std::optional<Cost> c = instance.graph.edge_cost(u, v);
      if (!c) {
        throw ParseError("solution edge " + std::to_string(u) + "-" +
                             std::to_string(v) + " is not in the instance",
                         lineno);
      }
      edges.push_back(make_edge(u, v, *c));
    } else if (key == "end") {
      ended = true;
      break;
    } else {
      throw ParseError("unknown solution line '" + t[0] + "'", lineno);
    }
  }
  if (!ended) throw ParseError("missing END", lineno);
  Solution s = Solution::from_edges(std::move(edges));
  if (declared_cost && *declared_cost != s.cost) {
    throw ParseError("declared cost " + std::to_string(*declared_cost) +
                         " != edge sum " + std::to_string(s.cost),
                     lineno);
  }
  return s;
}

OptimaTable OptimaTable::from_csv(std::istream& in) {
  OptimaTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(s);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(trim(col));
    if (cols.size() != 3) {
      throw ParseError("expected name,cost,optimal", lineno);
    }
    if (lower(cols[0]) == "name") continue; // header row
    if (table.entries_.count(lower(cols[0]))) {
      throw ParseError("duplicate instance name '" + cols[0] + "'", lineno);
    }
    Entry e;
    e.cost = static_cast<Cost>(parse_int(cols[1], lineno, "cost"));
    if (e.cost <= 0) throw ParseError("cost must be positive", lineno);
    std::string flag = lower(cols[2]);
    if (flag == "true" || flag == "1" || flag == "yes") {
      e.proven_optimal = true;
    } else if (flag == "false" || flag == "0" || flag == "no") {
      e.proven_optimal = false;
    } else {
      throw ParseError("bad optimal flag '" + cols[2] + "'", lineno);
    }
    table.entries_[lower(cols[0])] = e;
  }
  return table;
}

OptimaTable OptimaTable::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return from_csv(in);
}

std::optional<OptimaTable::Entry> OptimaTable::lookup(const std::string& name) const {
  auto it = entries_.find(lower(name));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

double gap_percent(double value, double reference) {
  if (reference == 0.0) return 0.0;
  return (value - reference) / reference * 100.0;
}

} // namespace stvnd
