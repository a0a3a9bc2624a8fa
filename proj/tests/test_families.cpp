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

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sparing;
using sparing::testing::code_of;

namespace {

bool is_clique(const Graph& g, const VertexSet& s) {
  const std::size_t k = s.size();
  return edges_within(g, s).size() == k * (k - 1) / 2;
}

}  // namespace

TEST_CASE("generate: documented small instances", "[families]") {
  const LabeledGraph sun = generate("family=complete_sun;params=n=3");
  CHECK(sun.graph.vertex_count() == 6);
  CHECK(sun.graph.edge_count() == 9);

  const LabeledGraph wind = generate("family=windmill;params=n=3,r=2");
  CHECK(wind.graph.vertex_count() == 5);
  CHECK(wind.graph.edge_count() == 6);
  CHECK(partition_of(wind, "hub") == VertexSet{0});
  CHECK(wind.graph.degree(0) == 4);

  const LabeledGraph cone = generate("family=cone;params=m=4,n=2");
  CHECK(cone.graph.vertex_count() == 6);
  CHECK(cone.graph.edge_count() == 12);

  const LabeledGraph split = generate("family=complete_split;params=r=3,s=2");
  CHECK(split.graph.vertex_count() == 5);
  CHECK(split.graph.edge_count() == 9);

  CHECK(code_of([] { generate("family=cycle;params=n=2"); }) == ErrorCode::InvalidParam);
}

TEST_CASE("generate: parameter domains are enforced", "[families]") {
  CHECK(code_of([] { generate("family=complete_sun;params=n=2"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=windmill;params=n=1,r=2"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=windmill;params=n=3,r=1"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=cone;params=m=2,n=1"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=wheel;params=m=2"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=block_chain;params=cliques=3:1"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=cactus_chain;params=cycles=3:2"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=complete;params=m=3"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=complete"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=torus;params=n=3"); }) == ErrorCode::InvalidParam);
  CHECK(code_of([] { generate("family=split;params=r=2,s=2,adj=2-0"); }) == ErrorCode::InvalidParam);
}

TEST_CASE("partition_of", "[families]") {
  CHECK(partition_of(generate("family=complete_sun;params=n=3"), "W") == VertexSet{3, 4, 5});
  CHECK(partition_of(generate("family=wheel;params=m=4"), "hub") == VertexSet{4});
  CHECK(code_of([] { partition_of(generate("family=cycle;params=n=5"), "X"); }) == ErrorCode::UnknownPartition);
}

TEST_CASE("family spec strings round-trip", "[families]") {
  for (const FamilySpec& spec : sparing::testing::small_family_corpus()) {
    CHECK(parse_family_spec(to_string(spec)) == spec);
  }
  CHECK(to_string(make_spec(Family::Cone, {{"m", 4}, {"n", 2}})) == "family=cone;params=m=4,n=2");
}

TEST_CASE("partitions are disjoint and cover every vertex", "[families][property]") {
  for (const FamilySpec& spec : sparing::testing::small_family_corpus()) {
    const LabeledGraph lg = generate(spec);
    INFO(to_string(spec));
    CHECK(lg.graph.is_well_formed());
    VertexSet seen;
    for (const auto& [name, members] : lg.partitions) {
      CHECK_FALSE(seen.intersects(members));
      seen |= members;
    }
    CHECK(seen == lg.graph.all_vertices());
  }
}

TEST_CASE("complete sun structure", "[families]") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const LabeledGraph lg = generate(make_spec(Family::CompleteSun, {{"n", n}}));
    const VertexSet& w = partition_of(lg, "W");
    CHECK(is_independent(lg.graph, w));
    CHECK(is_clique(lg.graph, partition_of(lg, "U")));
    w.for_each([&](Vertex v) { CHECK(lg.graph.degree(v) == 2); });
    // w_j sees u_j and u_{j+1 mod n}
    CHECK(lg.graph.has_edge(n + n - 1, n - 1));
    CHECK(lg.graph.has_edge(n + n - 1, 0));
  }
}

TEST_CASE("complete split structure", "[families]") {
  for (std::uint32_t r = 1; r <= 5; ++r) {
    for (std::uint32_t s = 0; s <= 4; ++s) {
      const LabeledGraph lg = generate(make_spec(Family::CompleteSplit, {{"r", r}, {"s", s}}));
      CHECK(is_clique(lg.graph, partition_of(lg, "clique")));
      const VertexSet& ind = partition_of(lg, "independent");
      CHECK(is_independent(lg.graph, ind));
      ind.for_each([&](Vertex v) { CHECK(lg.graph.degree(v) == r); });
    }
  }
}

TEST_CASE("general split graph follows its adjacency list", "[families]") {
  const LabeledGraph lg = generate("family=split;params=r=3,s=2,adj=0-0:2-1");
  CHECK(lg.graph.edge_count() == 3 + 2);
  CHECK(lg.graph.has_edge(0, 3));
  CHECK(lg.graph.has_edge(2, 4));
  CHECK(is_independent(lg.graph, partition_of(lg, "independent")));
}

TEST_CASE("complete bisplit is complete tripartite", "[families]") {
  for (std::uint32_t x = 1; x <= 3; ++x)
    for (std::uint32_t y = 1; y <= 3; ++y)
      for (std::uint32_t z = 1; z <= 3; ++z) {
        const LabeledGraph lg = generate(make_spec(Family::CompleteBisplit, {}, {x, y, z}));
        const VertexSet& X = partition_of(lg, "X");
        const VertexSet& Y = partition_of(lg, "Y");
        const VertexSet& Z = partition_of(lg, "Z");
        for (const VertexSet* part : {&X, &Y, &Z}) CHECK(is_independent(lg.graph, *part));
        CHECK(lg.graph.edge_count() == x * y + y * z + x * z);
      }
}

TEST_CASE("bisplit graph always has the Y-Z biclique", "[families]") {
  const FamilySpec spec = random::random_bisplit(3, 2, 4, 0.3, 5);
  const LabeledGraph lg = generate(spec);
  const VertexSet& Y = partition_of(lg, "Y");
  const VertexSet& Z = partition_of(lg, "Z");
  Y.for_each([&](Vertex y) { Z.for_each([&](Vertex z) { CHECK(lg.graph.has_edge(y, z)); }); });
  CHECK(lg.graph.edge_count() == 2 * 4 + spec.cross.size());
  CHECK(is_independent(lg.graph, partition_of(lg, "X")));
}

TEST_CASE("windmill order and size", "[families]") {
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t r = 2; r <= 4; ++r) {
      const Graph g = generate(make_spec(Family::Windmill, {{"n", n}, {"r", r}})).graph;
      CHECK(g.vertex_count() == r * (n - 1) + 1);
      CHECK(g.edge_count() == r * n * (n - 1) / 2);
    }
  CHECK(generate("family=friendship;params=r=3").graph == generate("family=windmill;params=n=3,r=3").graph);
}

TEST_CASE("block chain order, size and clique overlap", "[families]") {
  const std::vector<std::vector<std::uint32_t>> lists{{2}, {3, 3}, {2, 4, 3}, {4, 4, 4, 2}};
  for (const auto& sizes : lists) {
    const Graph g = generate(make_spec(Family::BlockChain, {}, sizes)).graph;
    std::size_t order = 1;
    std::size_t size = 0;
    for (auto k : sizes) {
      order += k - 1;
      size += k * (k - 1) / 2;
    }
    CHECK(g.vertex_count() == order);
    CHECK(g.edge_count() == size);
    const auto bs = blocks(g);
    CHECK(bs.size() == sizes.size());
    for (std::size_t i = 0; i < bs.size(); ++i) {
      for (std::size_t j = i + 1; j < bs.size(); ++j) {
        VertexSet a;
        VertexSet b;
        for (const Edge& e : bs[i]) a |= VertexSet{e.u, e.v};
        for (const Edge& e : bs[j]) b |= VertexSet{e.u, e.v};
        CHECK(a.count_common(b) <= 1);
      }
    }
  }
}

TEST_CASE("cactus chain cycles are edge-disjoint and share at most one vertex", "[families]") {
  const Graph g = generate("family=cactus_chain;params=cycles=5:3:4:3").graph;
  CHECK(g.vertex_count() == 1 + 4 + 2 + 3 + 2);
  CHECK(g.edge_count() == 5 + 3 + 4 + 3);
  const auto bs = blocks(g);
  CHECK(bs.size() == 4);
  for (std::size_t i = 0; i < bs.size(); ++i) {
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      VertexSet a;
      VertexSet b;
      for (const Edge& e : bs[i]) a |= VertexSet{e.u, e.v};
      for (const Edge& e : bs[j]) b |= VertexSet{e.u, e.v};
      CHECK(a.count_common(b) <= 1);
    }
  }
}

TEST_CASE("wheel and cone layout", "[families]") {
  const LabeledGraph wheel = generate("family=wheel;params=m=5");
  CHECK(partition_of(wheel, "rim") == VertexSet{0, 1, 2, 3, 4});
  CHECK(wheel.graph.degree(5) == 5);
  const LabeledGraph cone = generate("family=cone;params=m=5,n=3");
  CHECK(is_independent(cone.graph, partition_of(cone, "apex")));
  CHECK(cone.graph.edge_count() == 5 + 15);
  CHECK(generate("family=cone;params=m=6,n=1").graph == generate("family=wheel;params=m=6").graph);
}
