// Copyright 2026 The sparing Authors
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

// Plain-text graph format:
//
//   # optional comment lines
//   p <n> <m>
//   e <u> <v>      (m lines, 0-based, u < v, lexicographic order)

#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/graph.hpp"

namespace sparing {

inline void write_graph(std::ostream& os, const Graph& g) {
  os << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u << ' ' << e.v << '\n';
}

inline std::string to_graph_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

namespace detail {

inline bool is_blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace detail

inline Graph read_graph(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  unsigned long long n = 0;
  unsigned long long m = 0;
  std::vector<std::pair<unsigned long long, unsigned long long>> pairs;

  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (line.starts_with('#') || detail::is_blank(line)) continue;
      std::istringstream ss(line);
      std::string tag;
      std::string extra;
      if (!(ss >> tag >> n >> m) || tag != "p" || (ss >> extra)) detail::parse_fail(line_no, "expected 'p <n> <m>'");
      have_header = true;
      continue;
    }
    if (detail::is_blank(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    std::string extra;
    unsigned long long u = 0;
    unsigned long long v = 0;
    if (!(ss >> tag >> u >> v) || tag != "e" || (ss >> extra)) detail::parse_fail(line_no, "expected 'e <u> <v>'");
    if (u >= n || v >= n) detail::parse_fail(line_no, "endpoint out of range");
    if (u == v) detail::parse_fail(line_no, "self-loop");
    pairs.emplace_back(u, v);
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "missing 'p <n> <m>' header");
  if (pairs.size() != m) {
    throw Error(ErrorCode::ParseError,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(n), pairs);
  if (g.edge_count() != m) throw Error(ErrorCode::ParseError, "duplicate edge lines");
  return g;
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

inline Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open graph file '" + path + "'");
  return read_graph(in);
}

}  // namespace sparing
