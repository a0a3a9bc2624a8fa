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

// Test-only helpers. naive_sparing() is a deliberately plain oracle: it
// walks every subset as a vector<bool>, tests independence against the edge
// list and orders ties with std::lexicographical_compare. It shares no code
// path with the library's bitset solvers.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sparing/sparing.hpp"

namespace sparing::testing {

struct NaiveResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
};

inline NaiveResult naive_sparing(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const EdgeList edges = g.edges();
  NaiveResult best{edges.size() + 1, {}};
  std::vector<bool> in(n, false);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    for (std::size_t v = 0; v < n; ++v) in[v] = ((code >> v) & 1U) != 0;
    bool independent = true;
    std::size_t mono = 0;
    for (const Edge& e : edges) {
      if (in[e.u] && in[e.v]) independent = false;
      if (!in[e.u] && !in[e.v]) ++mono;
    }
    if (!independent) continue;
    std::vector<Vertex> members;
    for (std::size_t v = 0; v < n; ++v)
      if (in[v]) members.push_back(static_cast<Vertex>(v));
    if (mono < best.value ||
        (mono == best.value && std::lexicographical_compare(members.begin(), members.end(), best.witness.begin(),
                                                            best.witness.end()))) {
      best = {mono, members};
    }
  }
  return best;
}

inline Graph family(std::string_view spec) { return generate(spec).graph; }

inline ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected sparing::Error");
  return ErrorCode::ParseError;
}

/// Small instances of every family, used by several property tests.
inline std::vector<FamilySpec> small_family_corpus() {
  std::vector<FamilySpec> out;
  for (std::uint32_t n = 1; n <= 7; ++n) out.push_back(make_spec(Family::Path, {{"n", n}}));
  for (std::uint32_t n = 3; n <= 9; ++n) out.push_back(make_spec(Family::Cycle, {{"n", n}}));
  for (std::uint32_t n = 1; n <= 7; ++n) out.push_back(make_spec(Family::Complete, {{"n", n}}));
  out.push_back(make_spec(Family::CompleteBipartite, {}, {2, 3}));
  out.push_back(make_spec(Family::CompleteMultipartite, {}, {1, 2, 2, 3}));
  for (std::uint32_t n = 3; n <= 5; ++n) out.push_back(make_spec(Family::CompleteSun, {{"n", n}}));
  out.push_back(random::random_split(4, 3, 0.5, 7));
  out.push_back(make_spec(Family::CompleteSplit, {{"r", 3}, {"s", 3}}));
  out.push_back(make_spec(Family::CompleteBisplit, {}, {1, 2, 3}));
  out.push_back(random::random_bisplit(2, 3, 3, 0.5, 11));
  out.push_back(make_spec(Family::BlockChain, {}, {3, 2, 4}));
  out.push_back(make_spec(Family::Windmill, {{"n", 4}, {"r", 2}}));
  out.push_back(make_spec(Family::Friendship, {{"r", 3}}));
  for (std::uint32_t m = 3; m <= 7; ++m) out.push_back(make_spec(Family::Wheel, {{"m", m}}));
  out.push_back(make_spec(Family::Cone, {{"m", 5}, {"n", 2}}));
  out.push_back(make_spec(Family::CactusChain, {}, {3, 4, 5}));
  return out;
}

}  // namespace sparing::testing
