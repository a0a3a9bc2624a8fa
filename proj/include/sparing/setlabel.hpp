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

// Sum-set arithmetic and the (weak) integer additive set-indexer checks.

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/graph.hpp"

namespace sparing {

/// Finite non-empty set of non-negative integers, stored sorted.
class IntegerSet {
 public:
  using Value = std::uint64_t;

  IntegerSet(std::initializer_list<Value> values) : IntegerSet(std::vector<Value>(values)) {}
  explicit IntegerSet(std::vector<Value> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (values_.empty()) throw Error(ErrorCode::InvalidParam, "set-labels must be non-empty");
  }

  std::size_t size() const { return values_.size(); }
  bool is_singleton() const { return values_.size() == 1; }
  const std::vector<Value>& values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend auto operator<=>(const IntegerSet&, const IntegerSet&) = default;
  friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

 private:
  std::vector<Value> values_;
};

inline std::ostream& operator<<(std::ostream& os, const IntegerSet& s) {
  os << '{';
  bool first = true;
  for (auto v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  return os << '}';
}

/// A + B = { a + b : a in A, b in B }
inline IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
  constexpr auto kMax = std::numeric_limits<IntegerSet::Value>::max();
  std::vector<IntegerSet::Value> sums;
  sums.reserve(a.size() * b.size());
  for (auto x : a) {
    for (auto y : b) {
      if (x > kMax - y) throw Error(ErrorCode::TooLarge, "sum-set element overflows 64 bits");
      sums.push_back(x + y);
    }
  }
  return IntegerSet(std::move(sums));
}

/// Vertex labeling f : V(G) -> P(N_0). Lookups of an unassigned vertex raise
/// MissingLabel.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::map<Vertex, IntegerSet> assignments) : assignments_(std::move(assignments)) {}
  Labeling(std::initializer_list<std::pair<const Vertex, IntegerSet>> assignments) : assignments_(assignments) {}

  void assign(Vertex v, IntegerSet label) { assignments_.insert_or_assign(v, std::move(label)); }

  const IntegerSet& at(Vertex v) const {
    const auto it = assignments_.find(v);
    if (it == assignments_.end()) throw Error(ErrorCode::MissingLabel, "vertex " + std::to_string(v) + " has no label");
    return it->second;
  }
  bool has(Vertex v) const { return assignments_.contains(v); }
  std::size_t size() const { return assignments_.size(); }
  const std::map<Vertex, IntegerSet>& assignments() const { return assignments_; }

  /// Throws MissingLabel unless every vertex of `g` is labelled.
  void require_total(const Graph& g) const {
    for (Vertex v = 0; v < g.vertex_count(); ++v) at(v);
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::map<Vertex, IntegerSet> assignments_;
};

using EdgeLabels = std::map<Edge, IntegerSet>;

/// f+(uv) = f(u) + f(v) for every edge.
inline EdgeLabels induced_edge_labels(const Graph& g, const Labeling& f) {
  f.require_total(g);
  EdgeLabels out;
  for (const Edge& e : g.edges()) out.emplace(e, sumset(f.at(e.u), f.at(e.v)));
  return out;
}

enum class FailureKind { VertexCollision, EdgeCollision, WeakConditionViolated };

constexpr std::string_view to_string(FailureKind k) {
  switch (k) {
    case FailureKind::VertexCollision: return "VertexCollision";
    case FailureKind::EdgeCollision: return "EdgeCollision";
    case FailureKind::WeakConditionViolated: return "WeakConditionViolated";
  }
  return "?";
}

struct Failure {
  FailureKind kind;
  std::vector<Vertex> vertices;  // VertexCollision: the colliding pair
  EdgeList edges;                // EdgeCollision: the pair; WeakConditionViolated: the edge

  friend bool operator==(const Failure&, const Failure&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Failure& f) {
  os << to_string(f.kind);
  if (!f.vertices.empty()) {
    os << (f.vertices.size() == 1 ? " vertex " : " vertices ");
    for (std::size_t i = 0; i < f.vertices.size(); ++i) os << (i ? "," : "") << f.vertices[i];
  }
  if (!f.edges.empty()) {
    os << (f.edges.size() == 1 ? " edge " : " edges ");
    for (std::size_t i = 0; i < f.edges.size(); ++i) os << (i ? "," : "") << f.edges[i];
  }
  return os;
}

struct Verdict {
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

// Every colliding pair within each group of equal keys, in key order.
template <typename Key, typename Item, typename Emit>
void emit_collisions(const std::map<Key, std::vector<Item>>& groups, Emit&& emit) {
  for (const auto& [key, items] : groups) {
    for (std::size_t i = 0; i < items.size(); ++i)
      for (std::size_t j = i + 1; j < items.size(); ++j) emit(items[i], items[j]);
  }
}

inline void collect_iasi_failures(const Graph& g, const Labeling& f, const EdgeLabels& edge_labels, Verdict& out) {
  std::map<IntegerSet, std::vector<Vertex>> by_vertex_label;
  for (Vertex v = 0; v < g.vertex_count(); ++v) by_vertex_label[f.at(v)].push_back(v);
  std::vector<Failure> vertex_failures;
  detail::emit_collisions(by_vertex_label, [&](Vertex a, Vertex b) {
    vertex_failures.push_back({FailureKind::VertexCollision, {a, b}, {}});
  });
  std::sort(vertex_failures.begin(), vertex_failures.end(),
            [](const Failure& a, const Failure& b) { return a.vertices < b.vertices; });

  std::map<IntegerSet, EdgeList> by_edge_label;
  for (const auto& [e, label] : edge_labels) by_edge_label[label].push_back(e);
  std::vector<Failure> edge_failures;
  detail::emit_collisions(by_edge_label, [&](const Edge& a, const Edge& b) {
    edge_failures.push_back({FailureKind::EdgeCollision, {}, {a, b}});
  });
  std::sort(edge_failures.begin(), edge_failures.end(),
            [](const Failure& a, const Failure& b) { return a.edges < b.edges; });

  out.failures.insert(out.failures.end(), vertex_failures.begin(), vertex_failures.end());
  out.failures.insert(out.failures.end(), edge_failures.begin(), edge_failures.end());
}

}  // namespace detail

/// Injectivity of f on vertices and of f+ on edges. Every colliding pair is
/// reported.
inline Verdict verify_iasi(const Graph& g, const Labeling& f) {
  const EdgeLabels edge_labels = induced_edge_labels(g, f);
  Verdict verdict;
  detail::collect_iasi_failures(g, f, edge_labels, verdict);
  return verdict;
}

/// IASI plus |f+(uv)| = max(|f(u)|, |f(v)|) on every edge.
inline Verdict verify_weak(const Graph& g, const Labeling& f) {
  const EdgeLabels edge_labels = induced_edge_labels(g, f);
  Verdict verdict;
  detail::collect_iasi_failures(g, f, edge_labels, verdict);
  for (const auto& [e, label] : edge_labels) {
    if (label.size() != std::max(f.at(e.u).size(), f.at(e.v).size())) {
      verdict.failures.push_back({FailureKind::WeakConditionViolated, {}, {e}});
    }
  }
  return verdict;
}

/// Edges whose induced label is a singleton.
inline EdgeList mono_edges(const Graph& g, const Labeling& f) {
  EdgeList out;
  for (const auto& [e, label] : induced_edge_labels(g, f)) {
    if (label.is_singleton()) out.push_back(e);
  }
  return out;
}

/// Vertices whose label has more than one element.
inline VertexSet non_singleton_vertices(const Graph& g, const Labeling& f) {
  f.require_total(g);
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!f.at(v).is_singleton()) out.insert(v);
  }
  return out;
}

}  // namespace sparing
