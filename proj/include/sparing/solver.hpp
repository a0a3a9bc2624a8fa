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

// Exact sparing numbers.
//
// In a weak IASI every edge has a singleton endpoint, so the vertices with
// non-singleton labels form an independent set I and the mono-indexed edges
// are exactly the edges inside V \ I. Conversely construct_witness realises
// any independent I. Hence
//
//   phi(G) = min over independent I of |E(G[V \ I])|
//          = |E| - max over independent I of sum_{v in I} deg(v),
//
// a maximum-weight independent set problem with degree weights.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/graph.hpp"
#include "sparing/setlabel.hpp"

namespace sparing {

inline constexpr std::size_t kBruteForceLimit = 24;  // inclusive
inline constexpr std::size_t kWitnessLimit = 30;     // exclusive; 2 * 4^29 < 2^64
inline constexpr std::size_t kExactLimit = 512;      // inclusive

struct SolverStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0.0;
};

struct SparingResult {
  std::size_t value = 0;
  VertexSet witness;  // non-singleton vertices
  EdgeList mono;      // edges_within(G, V \ witness)
  SolverStats stats;
};

struct SolverOptions {
  unsigned threads = 1;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Lexicographic order of the sorted member sequences of two bitmasks, with
/// a proper prefix ordered first.
constexpr bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const bool in_a = ((a >> d) & 1U) != 0;
  // The set lacking d either continues with something larger (and loses) or
  // stops there (and is a prefix of the other).
  return in_a ? (b >> d) != 0 : (a >> d) == 0;
}

inline SparingResult make_result(const Graph& g, const VertexSet& witness, std::uint64_t nodes,
                                 Clock::time_point start) {
  SparingResult r;
  r.witness = witness;
  r.mono = edges_within(g, g.all_vertices() - witness);
  r.value = r.mono.size();
  r.stats.nodes = nodes;
  r.stats.elapsed_ms = ms_since(start);
  return r;
}

}  // namespace detail

/// Reference oracle: scans every vertex subset. Limited to 24 vertices.
inline SparingResult sparing_bruteforce(const Graph& g) {
  const auto start = detail::Clock::now();
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceLimit) {
    throw Error(ErrorCode::TooLarge, "brute force handles at most " + std::to_string(kBruteForceLimit) + " vertices");
  }
  std::vector<std::uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::uint64_t best_set = 0;
  std::size_t best_mono = g.edge_count() + 1;
  std::uint64_t visited = 0;
  for (std::uint64_t set = 0; set <= all; ++set) {
    bool independent = true;
    for (std::uint64_t bits = set; bits != 0 && independent; bits &= bits - 1) {
      independent = (adj[static_cast<std::size_t>(std::countr_zero(bits))] & set) == 0;
    }
    if (!independent) continue;
    ++visited;
    const std::uint64_t rest = all & ~set;
    std::size_t twice = 0;
    for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
      twice += static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(std::countr_zero(bits))] & rest));
    }
    const std::size_t mono = twice / 2;
    if (mono < best_mono || (mono == best_mono && detail::lex_less(set, best_set))) {
      best_mono = mono;
      best_set = set;
    }
  }
  VertexSet witness;
  for (std::uint64_t bits = best_set; bits != 0; bits &= bits - 1) {
    witness.insert(static_cast<Vertex>(std::countr_zero(bits)));
  }
  return detail::make_result(g, witness, visited, start);
}

namespace detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool test(std::size_t v) const { return ((w[v / 64] >> (v % 64)) & 1U) != 0; }
  void set(std::size_t v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool none() const {
    for (auto x : w)
      if (x != 0) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits without(const Bits& o) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  /// Members strictly greater than v.
  Bits above(std::size_t v) const {
    Bits r = *this;
    const std::size_t word = v / 64;
    for (std::size_t i = 0; i < word; ++i) r.w[i] = 0;
    const std::size_t bit = v % 64;
    r.w[word] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
    return r;
  }
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < W; ++i)
      for (std::uint64_t bits = w[i]; bits != 0; bits &= bits - 1)
        fn(i * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
  }
};

/// Maximum-weight independent set with degree weights, then the
/// lexicographically least independent set attaining that weight.
template <std::size_t W>
class MwisSolver {
 public:
  using Set = Bits<W>;

  explicit MwisSolver(const Graph& g) : n_(g.vertex_count()), adj_(n_), weight_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      g.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex u) { adj_[v].set(u); });
      weight_[v] = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
      all_.set(v);
    }
    by_weight_.resize(n_);
    std::iota(by_weight_.begin(), by_weight_.end(), std::size_t{0});
    std::stable_sort(by_weight_.begin(), by_weight_.end(),
                     [&](std::size_t a, std::size_t b) { return weight_[a] > weight_[b]; });
  }

  std::int64_t max_weight(unsigned threads) {
    best_.store(greedy_seed());
    std::vector<Task> tasks;
    if (threads <= 1) {
      tasks.push_back({all_, 0});
    } else {
      expand({all_, 0}, tasks, static_cast<std::size_t>(threads) * 8);
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      std::uint64_t local_nodes = 0;
      for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
        search(tasks[i].candidates, tasks[i].weight, local_nodes);
      }
      nodes_.fetch_add(local_nodes);
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return best_.load();
  }

  /// First independent set of weight `target` in the pre-order of the set
  /// enumeration tree, which is the lexicographic order of sorted sequences.
  VertexSet least_with_weight(std::int64_t target) {
    Set chosen;
    std::uint64_t local_nodes = 0;
    const bool found = find_least(chosen, all_, 0, target, local_nodes);
    nodes_.fetch_add(local_nodes);
    if (!found) throw Error(ErrorCode::CertificationFailed, "no independent set attains the optimum weight");
    VertexSet out;
    chosen.for_each([&](std::size_t v) { out.insert(static_cast<Vertex>(v)); });
    return out;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  struct Task {
    Set candidates;
    std::int64_t weight;
  };

  // Greedy clique cover of `cands`; each clique contributes its heaviest
  // member, which bounds what any independent subset can collect.
  std::int64_t cover_bound(const Set& cands) const {
    std::int64_t bound = 0;
    std::vector<Set> commons;
    for (std::size_t v : by_weight_) {
      if (!cands.test(v)) continue;
      bool placed = false;
      for (Set& common : commons) {
        if (common.test(v)) {
          common = common & adj_[v];
          placed = true;
          break;
        }
      }
      if (!placed) {
        commons.push_back(adj_[v]);
        bound += weight_[v];
      }
    }
    return bound;
  }

  // Take every candidate whose weight covers its remaining neighbourhood.
  void reduce(Set& cands, std::int64_t& weight) const {
    bool changed = true;
    while (changed) {
      changed = false;
      cands.for_each([&](std::size_t v) {
        if (changed || !cands.test(v)) return;
        std::int64_t around = 0;
        (adj_[v] & cands).for_each([&](std::size_t u) { around += weight_[u]; });
        if (weight_[v] >= around) {
          weight += weight_[v];
          cands = cands.without(adj_[v]);
          cands.reset(v);
          changed = true;
        }
      });
    }
  }

  std::size_t branch_vertex(const Set& cands) const {
    std::size_t pick = 0;
    std::size_t pick_degree = 0;
    bool first = true;
    cands.for_each([&](std::size_t v) {
      const std::size_t d = (adj_[v] & cands).count();
      if (first || d > pick_degree) {
        pick = v;
        pick_degree = d;
        first = false;
      }
    });
    return pick;
  }

  void raise_best(std::int64_t value) {
    std::int64_t seen = best_.load();
    while (value > seen && !best_.compare_exchange_weak(seen, value)) {
    }
  }

  void search(Set cands, std::int64_t weight, std::uint64_t& nodes) {
    ++nodes;
    reduce(cands, weight);
    if (cands.none()) {
      raise_best(weight);
      return;
    }
    if (weight + cover_bound(cands) <= best_.load()) return;
    const std::size_t v = branch_vertex(cands);
    Set with = cands.without(adj_[v]);
    with.reset(v);
    search(with, weight + weight_[v], nodes);
    Set without = cands;
    without.reset(v);
    search(without, weight, nodes);
  }

  // Breadth-first split of the top of the search tree into independent
  // subproblems for the worker pool.
  void expand(Task root, std::vector<Task>& out, std::size_t wanted) {
    std::vector<Task> level{root};
    while (!level.empty() && out.size() + level.size() < wanted) {
      std::vector<Task> next;
      for (Task t : level) {
        reduce(t.candidates, t.weight);
        if (t.candidates.none()) {
          raise_best(t.weight);
          continue;
        }
        const std::size_t v = branch_vertex(t.candidates);
        Task with{t.candidates.without(adj_[v]), t.weight + weight_[v]};
        with.candidates.reset(v);
        Task without{t.candidates, t.weight};
        without.candidates.reset(v);
        next.push_back(with);
        next.push_back(without);
      }
      level = std::move(next);
    }
    out.insert(out.end(), level.begin(), level.end());
  }

  std::int64_t greedy_seed() const {
    Set cands = all_;
    std::int64_t weight = 0;
    for (std::size_t v : by_weight_) {
      if (!cands.test(v)) continue;
      weight += weight_[v];
      cands = cands.without(adj_[v]);
      cands.reset(v);
    }
    return weight;
  }

  bool find_least(Set& chosen, const Set& cands, std::int64_t weight, std::int64_t target, std::uint64_t& nodes) {
    ++nodes;
    if (weight == target) return true;
    if (weight + cover_bound(cands) < target) return false;
    bool found = false;
    cands.for_each([&](std::size_t x) {
      if (found) return;
      Set rest = cands.above(x).without(adj_[x]);
      chosen.set(x);
      if (find_least(chosen, rest, weight + weight_[x], target, nodes)) {
        found = true;
        return;
      }
      chosen.reset(x);
    });
    return found;
  }

  std::size_t n_;
  std::vector<Set> adj_;
  std::vector<std::int64_t> weight_;
  std::vector<std::size_t> by_weight_;
  Set all_;
  std::atomic<std::int64_t> best_{0};
  std::atomic<std::uint64_t> nodes_{0};
};

template <std::size_t W>
VertexSet solve_words(const Graph& g, unsigned threads, std::uint64_t& nodes) {
  MwisSolver<W> solver(g);
  const std::int64_t best = solver.max_weight(threads);
  VertexSet witness = solver.least_with_weight(best);
  nodes = solver.nodes();
  return witness;
}

}  // namespace detail

/// Branch and bound over independent sets. Returns the same value, witness
/// and mono list as sparing_bruteforce; the thread count only affects speed.
inline SparingResult sparing_exact(const Graph& g, SolverOptions options = {}) {
  const auto start = detail::Clock::now();
  const std::size_t n = g.vertex_count();
  if (n > kExactLimit) {
    throw Error(ErrorCode::TooLarge, "exact solver handles at most " + std::to_string(kExactLimit) + " vertices");
  }
  const unsigned threads = std::max(1U, options.threads);
  std::uint64_t nodes = 0;
  VertexSet witness;
  if (n <= 64) {
    witness = detail::solve_words<1>(g, threads, nodes);
  } else if (n <= 128) {
    witness = detail::solve_words<2>(g, threads, nodes);
  } else if (n <= 256) {
    witness = detail::solve_words<4>(g, threads, nodes);
  } else {
    witness = detail::solve_words<8>(g, threads, nodes);
  }
  return detail::make_result(g, witness, nodes, start);
}

/// Labels vertex i with {4^i}, or {4^i, 2*4^i} when i is in `non_singleton`.
/// Distinct vertices use disjoint base-4 digit positions, so all vertex and
/// edge labels are distinct and every edge with one doubleton end keeps
/// exactly two sums.
inline Labeling construct_witness(const Graph& g, const VertexSet& non_singleton) {
  if (g.vertex_count() >= kWitnessLimit) {
    throw Error(ErrorCode::TooLarge,
                "witness labels need fewer than " + std::to_string(kWitnessLimit) + " vertices to fit 64 bits");
  }
  g.check_set(non_singleton);
  if (!is_independent(g, non_singleton)) {
    throw Error(ErrorCode::NotIndependent, "non-singleton vertices must form an independent set");
  }
  Labeling f;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const IntegerSet::Value base = IntegerSet::Value{1} << (2 * v);
    if (non_singleton.contains(v)) {
      f.assign(v, IntegerSet{base, 2 * base});
    } else {
      f.assign(v, IntegerSet{base});
    }
  }
  return f;
}

/// sparing_exact followed by an explicit labeling that is re-verified.
inline std::pair<SparingResult, Labeling> solve_and_certify(const Graph& g, SolverOptions options = {}) {
  if (g.vertex_count() >= kWitnessLimit) {
    throw Error(ErrorCode::TooLarge, "certification needs fewer than " + std::to_string(kWitnessLimit) + " vertices");
  }
  SparingResult result = sparing_exact(g, options);
  Labeling f = construct_witness(g, result.witness);
  const Verdict verdict = verify_weak(g, f);
  const EdgeList mono = mono_edges(g, f);
  if (!verdict.ok() || mono.size() != result.value || mono != result.mono) {
    throw Error(ErrorCode::CertificationFailed, "witness labeling does not reproduce the sparing number");
  }
  return {std::move(result), std::move(f)};
}

}  // namespace sparing
