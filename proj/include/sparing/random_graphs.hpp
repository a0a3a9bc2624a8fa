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

// Seeded graph samplers for test corpora. Only the raw mt19937_64 stream is
// used (no std distributions) so a seed means the same graph everywhere.

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sparing/families.hpp"
#include "sparing/graph.hpp"

namespace sparing::random {

inline bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

/// G(n, p).
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng, p)) pairs.emplace_back(u, v);
  return Graph::from_edges(n, pairs);
}

/// Uniform labelled tree via a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 1) return Graph(n);
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (Vertex& c : code) c = static_cast<Vertex>(below(rng, n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    pairs.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) last.push_back(v);
  pairs.emplace_back(last[0], last[1]);
  return Graph::from_edges(n, pairs);
}

/// Split graph on clique r and independent set s, each cross pair kept with
/// probability p.
inline FamilySpec random_split(std::uint32_t r, std::uint32_t s, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilySpec spec = make_spec(Family::Split, {{"r", r}, {"s", s}});
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < s; ++j)
      if (coin(rng, p)) spec.cross.emplace_back(i, j);
  return spec;
}

/// Bisplit graph with parts x, y, z; each X-(Y u Z) pair kept with
/// probability p.
inline FamilySpec random_bisplit(std::uint32_t x, std::uint32_t y, std::uint32_t z, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FamilySpec spec = make_spec(Family::Bisplit, {}, {x, y, z});
  for (std::uint32_t i = 0; i < x; ++i)
    for (std::uint32_t j = 0; j < y + z; ++j)
      if (coin(rng, p)) spec.cross.emplace_back(i, j);
  return spec;
}

}  // namespace sparing::random
