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

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/vertex_set.hpp"

namespace sparing {

/// Undirected edge in canonical form (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) { return os << '(' << e.u << ',' << e.v << ')'; }

using EdgeList = std::vector<Edge>;

/// Simple undirected loopless graph on vertices 0..n-1 with bitset adjacency.
/// Values are immutable once built; every structural operation returns a new
/// graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Builds a graph from unordered index pairs. Duplicates (in either
  /// orientation) collapse to a single edge.
  template <typename Pairs>
  static Graph from_edges(std::size_t vertex_count, const Pairs& pairs) {
    Graph g(vertex_count);
    for (const auto& [a, b] : pairs) {
      const auto u = static_cast<std::size_t>(a);
      const auto v = static_cast<std::size_t>(b);
      if (u >= vertex_count || v >= vertex_count) {
        throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                    ") has an endpoint >= " + std::to_string(vertex_count));
      }
      if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop on vertex " + std::to_string(u));
      if (!g.adjacency_[u].contains(static_cast<Vertex>(v))) ++g.edge_count_;
      g.adjacency_[u].insert(static_cast<Vertex>(v));
      g.adjacency_[v].insert(static_cast<Vertex>(u));
    }
    return g;
  }
  static Graph from_edges(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    return from_edges<std::initializer_list<std::pair<Vertex, Vertex>>>(vertex_count, pairs);
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex u, Vertex v) const { return u < vertex_count() && adjacency_[u].contains(v); }

  /// All edges, lexicographically sorted.
  EdgeList edges() const {
    EdgeList out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
      adjacency_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    }
    return out;
  }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  bool contains_set(const VertexSet& s) const {
    const auto top = s.max();
    return !top || *top < vertex_count();
  }

  void check_vertex(Vertex v) const {
    if (v >= vertex_count()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " out of range for graph on " + std::to_string(vertex_count()) +
                      " vertices");
    }
  }
  void check_set(const VertexSet& s) const {
    if (!contains_set(s)) {
      throw Error(ErrorCode::IndexOutOfRange, "vertex set member " + std::to_string(*s.max()) +
                                                  " out of range for graph on " + std::to_string(vertex_count()) +
                                                  " vertices");
    }
  }

  /// Symmetric, loopless, and consistent with the cached edge count.
  bool is_well_formed() const {
    std::size_t degree_sum = 0;
    for (Vertex u = 0; u < vertex_count(); ++u) {
      if (!contains_set(adjacency_[u]) || adjacency_[u].contains(u)) return false;
      bool symmetric = true;
      adjacency_[u].for_each([&](Vertex v) { symmetric = symmetric && adjacency_[v].contains(u); });
      if (!symmetric) return false;
      degree_sum += adjacency_[u].size();
    }
    return degree_sum == 2 * edge_count_;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

inline bool is_independent(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  bool independent = true;
  s.for_each([&](Vertex v) { independent = independent && !g.neighbors(v).intersects(s); });
  return independent;
}

/// Edges with both endpoints in `s`, canonically ordered.
inline EdgeList edges_within(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  EdgeList out;
  s.for_each([&](Vertex u) {
    (g.neighbors(u) & s).for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  });
  return out;
}

inline std::size_t count_edges_within(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  std::size_t twice = 0;
  s.for_each([&](Vertex u) { twice += g.neighbors(u).count_common(s); });
  return twice / 2;
}

/// G2's vertices are shifted up by |V(G1)|.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const auto offset = static_cast<Vertex>(g1.vertex_count());
  EdgeList edges = g1.edges();
  for (const Edge& e : g2.edges()) edges.emplace_back(e.u + offset, e.v + offset);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return Graph::from_edges(g1.vertex_count() + g2.vertex_count(), pairs);
}

/// Vertex n+i is the shadow of vertex i and is joined to the neighbours of i.
inline Graph shadow(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    pairs.emplace_back(e.u, e.v);
    pairs.emplace_back(n + e.u, e.v);
    pairs.emplace_back(n + e.v, e.u);
  }
  return Graph::from_edges(2 * g.vertex_count(), pairs);
}

/// Replaces each listed edge (u,v) by a path u-w-v through a fresh vertex w.
/// Fresh vertices are numbered from |V(G)| in list order.
inline Graph subdivide_edges(const Graph& g, const EdgeList& to_split) {
  std::vector<Edge> sorted = to_split;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidParam, "edge list for subdivision contains duplicates");
  }
  for (const Edge& e : to_split) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::EdgeNotFound, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) pairs.emplace_back(e.u, e.v);
  }
  auto fresh = static_cast<Vertex>(g.vertex_count());
  for (const Edge& e : to_split) {
    pairs.emplace_back(e.u, fresh);
    pairs.emplace_back(fresh, e.v);
    ++fresh;
  }
  return Graph::from_edges(fresh, pairs);
}

/// Copy of `g` with one more edge.
inline Graph with_edge(const Graph& g, Edge e) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& f : g.edges()) pairs.emplace_back(f.u, f.v);
  pairs.emplace_back(e.u, e.v);
  return Graph::from_edges(g.vertex_count(), pairs);
}

struct Bipartition {
  VertexSet side0;
  VertexSet side1;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// BFS 2-colouring. Each component is rooted at its lowest index, which goes
/// to side 0.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      bool clash = false;
      g.neighbors(u).for_each([&](Vertex v) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          clash = true;
        }
      });
      if (clash) return std::nullopt;
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.side0 : parts.side1).insert(v);
  return parts;
}

/// Number of triangles containing v, i.e. edges among the neighbours of v.
inline std::size_t triangles_through(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return count_edges_within(g, g.neighbors(v));
}

/// Biconnected components as edge lists (each sorted), ordered by their
/// smallest edge. Isolated vertices belong to no block.
inline std::vector<EdgeList> blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<Edge> stack;
  std::vector<EdgeList> out;
  int timer = 0;

  // Iterative DFS so deep paths do not exhaust the call stack.
  struct Frame {
    Vertex v;
    int parent;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> dfs;
    disc[root] = low[root] = timer++;
    dfs.push_back({root, -1, g.neighbors(root).to_vector()});
    while (!dfs.empty()) {
      Frame& top = dfs.back();
      if (top.next < top.nbrs.size()) {
        const Vertex w = top.nbrs[top.next++];
        if (disc[w] == -1) {
          stack.emplace_back(top.v, w);
          disc[w] = low[w] = timer++;
          dfs.push_back({w, static_cast<int>(top.v), g.neighbors(w).to_vector()});
        } else if (static_cast<int>(w) != top.parent && disc[w] < disc[top.v]) {
          stack.emplace_back(top.v, w);
          low[top.v] = std::min(low[top.v], disc[w]);
        }
        continue;
      }
      const Vertex v = top.v;
      const int parent = top.parent;
      dfs.pop_back();
      if (parent < 0) continue;
      const auto p = static_cast<Vertex>(parent);
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        EdgeList block;
        const Edge cut(p, v);
        while (true) {
          const Edge e = stack.back();
          stack.pop_back();
          block.push_back(e);
          if (e == cut) break;
        }
        std::sort(block.begin(), block.end());
        out.push_back(std::move(block));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sparing
