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

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stvnd/graph.hpp"

namespace stvnd {

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// One benign oddity found while parsing (dropped self-loop, collapsed
/// parallel edge). The instance is still usable.
struct ParseWarning {
  int line;
  std::string message;
};

struct ParsedInstance {
  Instance instance;
  std::string name;            // Comment section Name, if any
  int declared_nodes = 0;      // header counts, before any cleanup
  int declared_edges = 0;
  int declared_terminals = 0;
  std::vector<ParseWarning> warnings;
};

/// Reads STP format: magic line, Comment / Graph / Terminals sections,
/// case-insensitive keywords. Parallel edges collapse to the cheapest;
/// self-loops are dropped with a warning. Structural problems throw
/// ParseError carrying the offending line number.
ParsedInstance parse_stp(std::istream& in);
ParsedInstance parse_stp_file(const std::string& path);

/// Writes an instance back out in STP format. parse(write(parse(f))) is a
/// fixpoint: node ids, edge order and costs survive the round trip.
void write_stp(std::ostream& out, const Instance& instance, const std::string& name);
void write_stp_file(const std::string& path, const Instance& instance,
                    const std::string& name);

/// Plain solution dump: NAME/COST header, one E line per edge.
void write_solution(std::ostream& out, const Solution& solution,
                    const std::string& name);
Solution parse_solution(std::istream& in, const Instance& instance);

/// Best-known optima, keyed case-insensitively by instance name.
class OptimaTable {
 public:
  /// CSV columns: name,cost,optimal(true/false). '#' lines are comments.
  static OptimaTable from_csv(std::istream& in);
  static OptimaTable from_csv_file(const std::string& path);

  struct Entry {
    Cost cost;
    bool proven_optimal;
  };
  std::optional<Entry> lookup(const std::string& name) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, Entry> entries_; // keys lowercased
};

/// Percentage gap of an achieved value over a reference, as the table
/// reports it: (value - reference) / reference * 100.
double gap_percent(double value, double reference);

} // namespace stvnd
