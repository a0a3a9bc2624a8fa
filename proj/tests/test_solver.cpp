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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sparing;
using sparing::testing::code_of;
using sparing::testing::family;
using sparing::testing::naive_sparing;

namespace {

std::vector<Vertex> members_of(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < 64; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

void check_against_naive(const Graph& g, const std::string& label) {
  INFO(label);
  const auto naive = naive_sparing(g);
  const SparingResult exact = sparing_exact(g);
  CHECK(exact.value == naive.value);
  CHECK(exact.witness.to_vector() == naive.witness);
  CHECK(exact.mono == edges_within(g, g.all_vertices() - exact.witness));
  if (g.vertex_count() <= kBruteForceLimit) {
    const SparingResult brute = sparing_bruteforce(g);
    CHECK(brute.value == naive.value);
    CHECK(brute.witness == exact.witness);
    CHECK(brute.mono == exact.mono);
  }
}

}  // namespace

TEST_CASE("lex_less agrees with lexicographic order of member lists", "[solver][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20000; ++trial) {
    // sparse masks so shared prefixes and proper prefixes come up often
    const std::uint64_t a = rng() & rng() & 0xFFFF;
    const std::uint64_t b = trial % 3 == 0 ? a | (std::uint64_t{1} << (rng() % 20)) : rng() & rng() & 0xFFFF;
    const auto ma = members_of(a);
    const auto mb = members_of(b);
    INFO(a << " " << b);
    CHECK(detail::lex_less(a, b) == std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end()));
  }
  CHECK(detail::lex_less(0b1, 0b11));   // [0] before [0,1]
  CHECK(detail::lex_less(0b11, 0b10));  // [0,1] before [1]
  CHECK_FALSE(detail::lex_less(0b101, 0b101));
}

TEST_CASE("sparing_bruteforce examples", "[solver]") {
  const SparingResult k4 = sparing_bruteforce(family("family=complete;params=n=4"));
  CHECK(k4.value == 3);
  CHECK(k4.witness == VertexSet{0});
  CHECK(k4.mono == EdgeList{{1, 2}, {1, 3}, {2, 3}});

  CHECK(sparing_bruteforce(family("family=cycle;params=n=5")).value == 1);

  const SparingResult c4 = sparing_bruteforce(family("family=cycle;params=n=4"));
  CHECK(c4.value == 0);
  CHECK(c4.witness == VertexSet{0, 2});

  const SparingResult sun = sparing_bruteforce(family("family=complete_sun;params=n=4"));
  CHECK(sun.value == 5);
  CHECK(sun.witness == VertexSet{0, 5, 6});

  CHECK(sparing_bruteforce(Graph(0)).value == 0);
  CHECK(code_of([] { sparing_bruteforce(Graph(25)); }) == ErrorCode::TooLarge);
}

TEST_CASE("sparing_exact examples", "[solver]") {
  const SparingResult w4 = sparing_exact(family("family=wheel;params=m=4"));
  CHECK(w4.value == 2);
  CHECK(w4.witness == VertexSet{0, 2});
  CHECK(sparing_exact(family("family=wheel;params=m=5")).value == 4);
  CHECK(sparing_exact(family("family=cone;params=m=4,n=2")).value == 4);
  CHECK(sparing_exact(Graph(0)).value == 0);
  CHECK(code_of([] { sparing_exact(Graph(513)); }) == ErrorCode::TooLarge);
}

TEST_CASE("exact, brute force and the naive oracle agree on every family", "[solver][property]") {
  for (const FamilySpec& spec : sparing::testing::small_family_corpus()) {
    const Graph g = generate(spec).graph;
    if (g.vertex_count() > 20) continue;
    check_against_naive(g, to_string(spec));
  }
}

TEST_CASE("exact, brute force and the naive oracle agree on random graphs", "[solver][property]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
    const std::uint64_t seed = rng();
    check_against_naive(random::erdos_renyi(n, p, seed), "n=" + std::to_string(n) + " seed=" + std::to_string(seed));
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    check_against_naive(random::erdos_renyi(16, 0.3, seed), "n=16 seed=" + std::to_string(seed));
  }
}

TEST_CASE("exact solver uses wider bitsets past 64 vertices", "[solver]") {
  // disjoint triangles: one mono edge each
  Graph g(0);
  for (int i = 0; i < 30; ++i) g = disjoint_union(g, family("family=complete;params=n=3"));
  REQUIRE(g.vertex_count() == 90);
  const SparingResult r = sparing_exact(g);
  CHECK(r.value == 30);
  VertexSet expected;
  for (Vertex i = 0; i < 30; ++i) expected.insert(3 * i);
  CHECK(r.witness == expected);

  const Graph big = disjoint_union(family("family=cycle;params=n=201"), family("family=cycle;params=n=101"));
  CHECK(sparing_exact(big).value == 2);
}

TEST_CASE("construct_witness", "[solver]") {
  const Graph k3 = family("family=complete;params=n=3");
  const Labeling f = construct_witness(k3, {2});
  CHECK(f.at(0) == IntegerSet{1});
  CHECK(f.at(1) == IntegerSet{4});
  CHECK(f.at(2) == IntegerSet{16, 32});
  CHECK(verify_weak(k3, f).ok());
  CHECK(mono_edges(k3, f) == EdgeList{{0, 1}});

  const Graph c4 = family("family=cycle;params=n=4");
  const Labeling h = construct_witness(c4, {0, 2});
  CHECK(verify_weak(c4, h).ok());
  CHECK(mono_edges(c4, h).empty());

  CHECK(code_of([&] { construct_witness(k3, {0, 1}); }) == ErrorCode::NotIndependent);
  CHECK(code_of([] { construct_witness(Graph(30), {}); }) == ErrorCode::TooLarge);
  CHECK(construct_witness(Graph(29), {28}).at(28) == IntegerSet{1ULL << 56, 1ULL << 57});
}

TEST_CASE("solve_and_certify", "[solver]") {
  const auto [k4, f] = solve_and_certify(family("family=complete;params=n=4"));
  CHECK(k4.value == 3);
  CHECK(f.size() == 4);

  const Graph friendship = family("family=friendship;params=r=2");
  const auto [fr, g] = solve_and_certify(friendship);
  CHECK(fr.value == 2);
  CHECK(g.size() == friendship.vertex_count());
  CHECK(mono_edges(friendship, g).size() == 2);

  CHECK(solve_and_certify(family("family=complete_bisplit;params=parts=1:2:3")).first.value == 2);
  CHECK(code_of([] { solve_and_certify(family("family=complete;params=n=30")); }) == ErrorCode::TooLarge);
}

TEST_CASE("no weak IASI beats the sparing number", "[solver][property]") {
  // Random labelings drawn from small value pools; whenever one happens to be
  // a weak IASI its mono count must be at least phi.
  std::mt19937_64 rng(99);
  int weak = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    const Graph g = random::erdos_renyi(n, 0.5, rng());
    Labeling f;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<IntegerSet::Value> values{rng() % 64};
      if (rng() % 3 == 0) values.push_back(rng() % 64);
      f.assign(v, IntegerSet(values));
    }
    if (!verify_weak(g, f).ok()) continue;
    ++weak;
    CHECK(mono_edges(g, f).size() >= naive_sparing(g).value);
  }
  CHECK(weak > 100);
}

TEST_CASE("adding an edge never lowers phi", "[solver][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 4 + rng() % 8;
    const Graph g = random::erdos_renyi(n, 0.3, rng());
    const auto u = static_cast<Vertex>(rng() % n);
    const auto v = static_cast<Vertex>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    const std::size_t before = sparing_exact(g).value;
    const std::size_t after = sparing_exact(with_edge(g, {u, v})).value;
    CHECK(after >= before);
  }
}

TEST_CASE("phi is additive over disjoint unions", "[solver][property]") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph a = random::erdos_renyi(3 + rng() % 8, 0.4, rng());
    const Graph b = random::erdos_renyi(3 + rng() % 8, 0.4, rng());
    CHECK(sparing_exact(disjoint_union(a, b)).value == sparing_exact(a).value + sparing_exact(b).value);
  }
}

TEST_CASE("result does not depend on the thread count", "[solver][property]") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = random::erdos_renyi(40, 0.25, seed);
    const SparingResult one = sparing_exact(g, {1});
    const SparingResult many = sparing_exact(g, {8});
    CHECK(one.value == many.value);
    CHECK(one.witness == many.witness);
    CHECK(one.mono == many.mono);
  }
}
