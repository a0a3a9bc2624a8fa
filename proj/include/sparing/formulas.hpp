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

// Catalog of closed-form sparing-number claims and a checker that compares
// each prediction with the exact solver.
//
// Predictions come only from the formulas below (plus, for the shadow and
// subdivision claims, the exact value of the *base* graph); the value they
// are compared against comes only from sparing_exact on the checked graph.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/families.hpp"
#include "sparing/graph.hpp"
#include "sparing/random_graphs.hpp"
#include "sparing/setlabel.hpp"
#include "sparing/solver.hpp"

namespace sparing {

enum class ClaimId {
  Complete = 1,
  OddCycle,
  Bipartite,
  CompleteSun,
  Split,
  CompleteSplit,
  Bisplit,
  CompleteTripartite,
  BlockGraph,
  Windmill,
  Friendship,
  ShadowDoubling,
  MaximalSubdivision,
  Cactus,
  Wheel,
  Cone,
};

struct Claim {
  ClaimId id;
  std::string code;     // "C1" .. "C16"
  std::string title;
  std::string formula;  // human-readable statement
  Family family;        // family the claim is usually instantiated on
  bool needs_graph;     // prediction depends on the concrete graph
};

inline const std::vector<Claim>& catalog() {
  static const std::vector<Claim> claims{
      {ClaimId::Complete, "C1", "complete graph", "phi(K_n) = (n-1)(n-2)/2", Family::Complete, false},
      {ClaimId::OddCycle, "C2", "odd cycle", "phi(C_n) = 1 for odd n", Family::Cycle, false},
      {ClaimId::Bipartite, "C3", "bipartite graph", "phi(G) = 0 for bipartite G", Family::CompleteBipartite, true},
      {ClaimId::CompleteSun, "C4", "complete sun", "phi(S_n) = (n^2-3n+6)/2", Family::CompleteSun, false},
      {ClaimId::Split, "C5", "split graph",
       "phi(G) = triangles through the non-singleton clique vertex, minimised over the clique", Family::Split, true},
      {ClaimId::CompleteSplit, "C6", "complete split graph", "phi(K_S(r,s)) = r(r-1)/2", Family::CompleteSplit,
       false},
      {ClaimId::Bisplit, "C7", "bisplit graph",
       "phi(G) = paths u-v-w with v in the smallest part and u, w in the other two parts", Family::Bisplit, true},
      {ClaimId::CompleteTripartite, "C8", "complete tripartite graph",
       "phi(K_{a,b,c}) = product of the two smallest parts", Family::CompleteBisplit, false},
      {ClaimId::BlockGraph, "C9", "block graph", "phi(G) = sum over cliques of (n_i-1)(n_i-2)/2", Family::BlockChain,
       false},
      {ClaimId::Windmill, "C10", "windmill", "phi(W(n,r)) = r(n-1)(n-2)/2", Family::Windmill, false},
      {ClaimId::Friendship, "C11", "friendship graph", "phi(F_r) = r", Family::Friendship, false},
      {ClaimId::ShadowDoubling, "C12", "shadow graph", "phi(S(G)) = 2 phi(G)", Family::Cycle, true},
      {ClaimId::MaximalSubdivision, "C13", "maximal subdivision", "phi(G') = 2 phi(G)", Family::Cycle, true},
      {ClaimId::Cactus, "C14", "cactus", "phi(G) = number of odd cycles", Family::CactusChain, true},
      {ClaimId::Wheel, "C15", "wheel", "phi(W_{m+1}) = ceil((m-1)/2)", Family::Wheel, false},
      {ClaimId::Cone, "C16", "(m,n)-cone", "phi(C_{m,n}) = m for n >= 2", Family::Cone, false},
  };
  return claims;
}

inline const Claim& find_claim(const std::string& code) {
  for (const Claim& c : catalog()) {
    if (c.code == code) return c;
  }
  throw Error(ErrorCode::UnknownClaim, "no claim with id '" + code + "'");
}

namespace detail {

[[noreturn]] inline void outside(const Claim& claim, const std::string& why) {
  throw Error(ErrorCode::DomainError, claim.code + ": " + why);
}

inline void require_family(const Claim& claim, const FamilySpec& spec, std::initializer_list<Family> allowed) {
  if (std::find(allowed.begin(), allowed.end(), spec.family) == allowed.end()) {
    outside(claim, "does not apply to family " + std::string(to_string(spec.family)));
  }
}

inline std::uint64_t param(const FamilySpec& spec, const std::string& key) {
  const auto it = spec.scalars.find(key);
  if (it == spec.scalars.end()) throw Error(ErrorCode::DomainError, "missing parameter " + key);
  return it->second;
}

inline bool is_odd_cycle_block(const EdgeList& block) {
  if (block.size() < 3 || block.size() % 2 == 0) return false;
  std::map<Vertex, int> degree;
  for (const Edge& e : block) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree.size() == block.size() &&
         std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
}

inline bool is_cycle_or_bridge(const EdgeList& block) {
  if (block.size() == 1) return true;
  std::map<Vertex, int> degree;
  for (const Edge& e : block) {
    ++degree[e.u];
    ++degree[e.v];
  }
  return degree.size() == block.size() &&
         std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
}

}  // namespace detail

/// The claimed sparing number. Throws DomainError outside the claim's
/// domain and MissingGraph when a graph-dependent claim gets no graph.
inline std::uint64_t predicted_value(const Claim& claim, const FamilySpec& spec, const LabeledGraph* lg = nullptr,
                                     SolverOptions options = {}) {
  auto graph = [&]() -> const LabeledGraph& {
    if (lg == nullptr) throw Error(ErrorCode::MissingGraph, claim.code + " needs the instantiated graph");
    return *lg;
  };
  switch (claim.id) {
    case ClaimId::Complete: {
      detail::require_family(claim, spec, {Family::Complete});
      const std::uint64_t n = detail::param(spec, "n");
      if (n < 1) detail::outside(claim, "n >= 1");
      return (n - 1) * (n - 2) / 2;
    }
    case ClaimId::OddCycle: {
      detail::require_family(claim, spec, {Family::Cycle});
      if (detail::param(spec, "n") % 2 == 0) detail::outside(claim, "cycle length must be odd");
      return 1;
    }
    case ClaimId::Bipartite: {
      if (!is_bipartite(graph().graph)) detail::outside(claim, "graph is not bipartite");
      return 0;
    }
    case ClaimId::CompleteSun: {
      detail::require_family(claim, spec, {Family::CompleteSun});
      const std::uint64_t n = detail::param(spec, "n");
      return (n * n - 3 * n + 6) / 2;
    }
    case ClaimId::Split: {
      detail::require_family(claim, spec, {Family::Split, Family::CompleteSplit});
      const LabeledGraph& g = graph();
      const VertexSet& clique = partition_of(g, "clique");
      std::optional<std::uint64_t> best;
      clique.for_each([&](Vertex v) {
        const std::uint64_t t = triangles_through(g.graph, v);
        if (!best || t < *best) best = t;
      });
      if (!best) detail::outside(claim, "empty clique");
      return *best;
    }
    case ClaimId::CompleteSplit: {
      detail::require_family(claim, spec, {Family::CompleteSplit});
      const std::uint64_t r = detail::param(spec, "r");
      return r * (r - 1) / 2;
    }
    case ClaimId::Bisplit: {
      detail::require_family(claim, spec, {Family::Bisplit, Family::CompleteBisplit});
      const LabeledGraph& g = graph();
      std::vector<const VertexSet*> parts{&partition_of(g, "X"), &partition_of(g, "Y"), &partition_of(g, "Z")};
      const auto smallest = static_cast<std::size_t>(
          std::min_element(parts.begin(), parts.end(),
                           [](const VertexSet* a, const VertexSet* b) { return a->size() < b->size(); }) -
          parts.begin());
      const VertexSet& a = *parts[(smallest + 1) % 3];
      const VertexSet& b = *parts[(smallest + 2) % 3];
      std::uint64_t paths = 0;
      parts[smallest]->for_each([&](Vertex v) {
        const VertexSet& nv = g.graph.neighbors(v);
        paths += nv.count_common(a) * nv.count_common(b);
      });
      return paths;
    }
    case ClaimId::CompleteTripartite: {
      const bool three_parts = spec.family == Family::CompleteMultipartite && spec.sizes.size() == 3;
      if (!three_parts) detail::require_family(claim, spec, {Family::CompleteBisplit});
      std::vector<std::uint64_t> sizes(spec.sizes.begin(), spec.sizes.end());
      std::sort(sizes.begin(), sizes.end());
      return sizes[0] * sizes[1];
    }
    case ClaimId::BlockGraph: {
      detail::require_family(claim, spec, {Family::BlockChain});
      std::uint64_t twice = 0;
      for (std::uint64_t k : spec.sizes) twice += (k - 1) * (k - 2);
      return twice / 2;
    }
    case ClaimId::Windmill: {
      detail::require_family(claim, spec, {Family::Windmill});
      const std::uint64_t n = detail::param(spec, "n");
      const std::uint64_t r = detail::param(spec, "r");
      return r * (n - 1) * (n - 2) / 2;
    }
    case ClaimId::Friendship: {
      detail::require_family(claim, spec, {Family::Friendship});
      return detail::param(spec, "r");
    }
    case ClaimId::ShadowDoubling:
    case ClaimId::MaximalSubdivision: return 2 * sparing_exact(graph().graph, options).value;
    case ClaimId::Cactus: {
      std::uint64_t odd = 0;
      for (const EdgeList& block : blocks(graph().graph)) {
        if (!detail::is_cycle_or_bridge(block)) detail::outside(claim, "graph is not a cactus");
        if (detail::is_odd_cycle_block(block)) ++odd;
      }
      return odd;
    }
    case ClaimId::Wheel: {
      detail::require_family(claim, spec, {Family::Wheel});
      return detail::param(spec, "m") / 2;  // == ceil((m-1)/2)
    }
    case ClaimId::Cone: {
      detail::require_family(claim, spec, {Family::Cone});
      if (detail::param(spec, "n") < 2) detail::outside(claim, "needs n >= 2");
      return detail::param(spec, "m");
    }
  }
  detail::outside(claim, "unhandled claim");
}

enum class Outcome { Match, Mismatch, NotApplicable };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Match: return "MATCH";
    case Outcome::Mismatch: return "MISMATCH";
    case Outcome::NotApplicable: return "-";
  }
  return "?";
}

/// Mono count of the labeling obtained by subdividing the mono-indexed edges
/// of a witness labeling and giving each new vertex the label of the edge it
/// replaced.
struct InducedSubdivision {
  std::uint64_t mono = 0;
  std::uint64_t non_singleton = 0;
  bool weak_ok = false;
};

struct ClaimVerdict {
  std::string claim;
  std::string checked;  // what was solved, e.g. "complete" or "shadow(cycle)"
  FamilySpec spec;
  std::optional<std::uint64_t> predicted;
  std::uint64_t exact = 0;
  Outcome verdict = Outcome::NotApplicable;
  std::uint64_t witness_size = 0;
  std::uint64_t mono_count = 0;
  double runtime_ms = 0.0;
  std::optional<InducedSubdivision> induced;
};

namespace detail {

inline InducedSubdivision induced_subdivision(const Graph& base, const SparingResult& base_result,
                                              const Graph& subdivided) {
  InducedSubdivision out;
  const Labeling f = construct_witness(base, base_result.witness);
  Labeling g = f;
  auto fresh = static_cast<Vertex>(base.vertex_count());
  for (const Edge& e : base_result.mono) g.assign(fresh++, sumset(f.at(e.u), f.at(e.v)));
  out.mono = mono_edges(subdivided, g).size();
  out.non_singleton = non_singleton_vertices(subdivided, g).size();
  out.weak_ok = verify_weak(subdivided, g).ok();
  return out;
}

}  // namespace detail

/// Instantiates the claim at `spec` and compares prediction and exact value.
/// A prediction outside the claim's domain yields NotApplicable instead of
/// an error.
inline ClaimVerdict check_claim(const Claim& claim, const FamilySpec& spec, SolverOptions options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const LabeledGraph lg = generate(spec);

  ClaimVerdict v;
  v.claim = claim.code;
  v.spec = spec;
  v.checked = std::string(to_string(spec.family));
  try {
    v.predicted = predicted_value(claim, spec, &lg, options);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DomainError) throw;
  }

  Graph target = lg.graph;
  if (claim.id == ClaimId::ShadowDoubling) {
    target = shadow(lg.graph);
    v.checked = "shadow(" + v.checked + ")";
  } else if (claim.id == ClaimId::MaximalSubdivision) {
    const SparingResult base = sparing_exact(lg.graph, options);
    target = subdivide_edges(lg.graph, base.mono);
    v.checked = "maximal_subdivision(" + v.checked + ")";
    if (lg.graph.vertex_count() < kWitnessLimit) v.induced = detail::induced_subdivision(lg.graph, base, target);
  }

  const SparingResult exact = sparing_exact(target, options);
  v.exact = exact.value;
  v.witness_size = exact.witness.size();
  v.mono_count = exact.mono.size();
  if (v.predicted) v.verdict = *v.predicted == v.exact ? Outcome::Match : Outcome::Mismatch;
  v.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

/// Parameter selection for a batch of claim checks. Scalar ranges override
/// the claim's defaults; `sizes` pins a single part/clique/cycle list;
/// `family` picks the base family for claims that accept several.
struct PointQuery {
  std::optional<Family> family;
  std::map<std::string, std::vector<std::uint32_t>> ranges;
  std::optional<std::vector<std::uint32_t>> sizes;
  std::uint64_t seed = 1;
};

namespace detail {

inline std::vector<std::uint32_t> span(std::uint32_t lo, std::uint32_t hi, std::uint32_t step = 1) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

inline std::vector<std::uint32_t> range_or(const PointQuery& q, const std::string& key,
                                           std::vector<std::uint32_t> fallback) {
  const auto it = q.ranges.find(key);
  return it == q.ranges.end() ? fallback : it->second;
}

// Non-decreasing lists over `values` whose chained order 1 + sum(k - 1)
// stays within `max_order`.
inline void chains(const std::vector<std::uint32_t>& values, std::size_t max_order, std::vector<std::uint32_t>& cur,
                   std::size_t first, std::size_t order, std::vector<std::vector<std::uint32_t>>& out) {
  if (!cur.empty()) out.push_back(cur);
  for (std::size_t i = first; i < values.size(); ++i) {
    if (order + values[i] - 1 > max_order) continue;
    cur.push_back(values[i]);
    chains(values, max_order, cur, i, order + values[i] - 1, out);
    cur.pop_back();
  }
}

inline std::vector<FamilySpec> base_points(const PointQuery& q) {
  std::vector<FamilySpec> out;
  auto add_n = [&](Family f, std::vector<std::uint32_t> ns) {
    for (std::uint32_t n : ns) out.push_back(make_spec(f, {{"n", n}}));
  };
  if (!q.family) {
    add_n(Family::Path, span(2, 8));
    add_n(Family::Cycle, span(3, 8));
    add_n(Family::Complete, span(3, 4));
    return out;
  }
  switch (*q.family) {
    case Family::Path: add_n(Family::Path, range_or(q, "n", span(2, 8))); break;
    case Family::Cycle: add_n(Family::Cycle, range_or(q, "n", span(3, 8))); break;
    case Family::Complete: add_n(Family::Complete, range_or(q, "n", span(3, 4))); break;
    default: throw Error(ErrorCode::InvalidParam, "base family must be path, cycle or complete");
  }
  return out;
}

}  // namespace detail

/// Parameter points a batch check visits for `claim`.
inline std::vector<FamilySpec> claim_points(const Claim& claim, const PointQuery& q = {}) {
  using detail::range_or;
  using detail::span;
  std::vector<FamilySpec> out;
  auto one_scalar = [&](Family f, const std::string& key, std::vector<std::uint32_t> fallback) {
    for (std::uint32_t v : range_or(q, key, std::move(fallback))) out.push_back(make_spec(f, {{key, v}}));
  };
  auto two_scalars = [&](Family f, const std::string& k1, std::vector<std::uint32_t> d1, const std::string& k2,
                         std::vector<std::uint32_t> d2) {
    for (std::uint32_t a : range_or(q, k1, std::move(d1)))
      for (std::uint32_t b : range_or(q, k2, d2)) out.push_back(make_spec(f, {{k1, a}, {k2, b}}));
  };
  auto chain_points = [&](Family f, std::vector<std::uint32_t> values, std::size_t max_order) {
    if (q.sizes) {
      out.push_back(make_spec(f, {}, *q.sizes));
      return;
    }
    std::vector<std::vector<std::uint32_t>> lists;
    std::vector<std::uint32_t> cur;
    detail::chains(values, max_order, cur, 0, 1, lists);
    std::sort(lists.begin(), lists.end());
    for (auto& l : lists) out.push_back(make_spec(f, {}, l));
  };

  switch (claim.id) {
    case ClaimId::Complete: one_scalar(Family::Complete, "n", span(3, 8)); break;
    case ClaimId::OddCycle: one_scalar(Family::Cycle, "n", span(3, 13, 2)); break;
    case ClaimId::Bipartite: {
      const Family f = q.family.value_or(Family::CompleteBipartite);
      if (f == Family::Path) {
        one_scalar(Family::Path, "n", span(2, 10));
      } else if (f == Family::Cycle) {
        one_scalar(Family::Cycle, "n", span(4, 14, 2));
      } else if (f == Family::CompleteBipartite) {
        if (q.sizes) {
          out.push_back(make_spec(f, {}, *q.sizes));
        } else {
          for (std::uint32_t a = 1; a <= 5; ++a)
            for (std::uint32_t b = a; b <= 5; ++b) out.push_back(make_spec(f, {}, {a, b}));
        }
      } else {
        throw Error(ErrorCode::InvalidParam, "C3 points come from path, cycle or complete_bipartite");
      }
      break;
    }
    case ClaimId::CompleteSun: one_scalar(Family::CompleteSun, "n", span(3, 6)); break;
    case ClaimId::Split: {
      for (std::uint32_t r : range_or(q, "r", span(3, 5)))
        for (std::uint32_t s : range_or(q, "s", span(2, 3)))
          out.push_back(random::random_split(r, s, 0.5, q.seed * 1000003ULL + r * 101ULL + s));
      break;
    }
    case ClaimId::CompleteSplit: two_scalars(Family::CompleteSplit, "r", span(3, 5), "s", span(2, 3)); break;
    case ClaimId::Bisplit: {
      std::vector<std::vector<std::uint32_t>> shapes{{1, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}, {2, 3, 4}};
      if (q.sizes) shapes = {*q.sizes};
      for (const auto& p : shapes) {
        if (p.size() != 3) throw Error(ErrorCode::InvalidParam, "C7 needs parts x,y,z");
        out.push_back(random::random_bisplit(p[0], p[1], p[2], 0.5, q.seed * 1000003ULL + p[0] * 10007ULL +
                                                                         p[1] * 101ULL + p[2]));
      }
      break;
    }
    case ClaimId::CompleteTripartite: {
      if (q.sizes) {
        out.push_back(make_spec(Family::CompleteBisplit, {}, *q.sizes));
        break;
      }
      for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = a; b <= 4; ++b)
          for (std::uint32_t c = b; c <= 4; ++c) out.push_back(make_spec(Family::CompleteBisplit, {}, {a, b, c}));
      break;
    }
    case ClaimId::BlockGraph: chain_points(Family::BlockChain, {2, 3, 4}, 14); break;
    case ClaimId::Windmill: two_scalars(Family::Windmill, "n", {3, 4}, "r", {2, 3}); break;
    case ClaimId::Friendship: one_scalar(Family::Friendship, "r", span(2, 4)); break;
    case ClaimId::ShadowDoubling:
    case ClaimId::MaximalSubdivision: out = detail::base_points(q); break;
    case ClaimId::Cactus: chain_points(Family::CactusChain, {3, 4, 5}, 14); break;
    case ClaimId::Wheel: one_scalar(Family::Wheel, "m", span(3, 9)); break;
    case ClaimId::Cone: two_scalars(Family::Cone, "m", span(3, 6), "n", span(2, 3)); break;
  }
  return out;
}

}  // namespace sparing
