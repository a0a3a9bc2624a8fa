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

// Generators for the named graph families.
//
// Numbering layout (0-based, consecutive):
//   path(n), cycle(n)          0..n-1 along the path/cycle
//   complete(n)                0..n-1
//   complete_bipartite(a,b)    A = 0..a-1, B = a..a+b-1
//   complete_multipartite(p..) parts P0, P1, ... in order
//   complete_sun(n)            U = 0..n-1 (clique), W = n..2n-1, w_j ~ u_j, u_{j+1 mod n}
//   split(r,s,adj)             clique 0..r-1, independent r..r+s-1
//   complete_split(r,s)        as split, every independent vertex sees the whole clique
//   complete_bisplit(x,y,z)    X, then Y, then Z; equals K_{x,y,z}
//   bisplit(x,y,z,adj)         X, Y, Z; Y-Z complete, X-(Y u Z) from adj
//   block_chain(n_1..n_r)      clique k starts at the last vertex of clique k-1
//   windmill(n,r)              shared vertex 0, copy c uses 1+c(n-1) .. (c+1)(n-1)
//   friendship(r)              windmill(3,r)
//   wheel(m)                   rim 0..m-1, hub m
//   cone(m,n)                  cycle 0..m-1, apexes m..m+n-1
//   cactus_chain(l_1..l_r)     cycle k starts at the last vertex of cycle k-1

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparing/error.hpp"
#include "sparing/graph.hpp"

namespace sparing {

enum class Family {
  Path,
  Cycle,
  Complete,
  CompleteBipartite,
  CompleteMultipartite,
  CompleteSun,
  Split,
  CompleteSplit,
  CompleteBisplit,
  Bisplit,
  BlockChain,
  Windmill,
  Friendship,
  Wheel,
  Cone,
  CactusChain,
};

inline constexpr std::array<std::pair<Family, std::string_view>, 16> kFamilyNames{{
    {Family::Path, "path"},
    {Family::Cycle, "cycle"},
    {Family::Complete, "complete"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::CompleteMultipartite, "complete_multipartite"},
    {Family::CompleteSun, "complete_sun"},
    {Family::Split, "split"},
    {Family::CompleteSplit, "complete_split"},
    {Family::CompleteBisplit, "complete_bisplit"},
    {Family::Bisplit, "bisplit"},
    {Family::BlockChain, "block_chain"},
    {Family::Windmill, "windmill"},
    {Family::Friendship, "friendship"},
    {Family::Wheel, "wheel"},
    {Family::Cone, "cone"},
    {Family::CactusChain, "cactus_chain"},
}};

constexpr std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [family, name_] : kFamilyNames) {
    if (name_ == name) return family;
  }
  throw Error(ErrorCode::InvalidParam, "unknown family '" + std::string(name) + "'");
}

/// A family plus its parameters. Scalar parameters are n, r, m, s; `sizes`
/// holds the part / clique / cycle list; `cross` holds the explicit
/// adjacency of split and bisplit graphs as local (i, j) pairs.
struct FamilySpec {
  Family family = Family::Path;
  std::map<std::string, std::uint32_t> scalars;
  std::vector<std::uint32_t> sizes;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cross;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Name under which `sizes` is serialised for the given family, or empty.
constexpr std::string_view sizes_key(Family f) {
  switch (f) {
    case Family::CompleteBipartite:
    case Family::CompleteMultipartite:
    case Family::CompleteBisplit:
    case Family::Bisplit: return "parts";
    case Family::BlockChain: return "cliques";
    case Family::CactusChain: return "cycles";
    default: return "";
  }
}

inline FamilySpec make_spec(Family f, std::initializer_list<std::pair<std::string, std::uint32_t>> scalars,
                            std::vector<std::uint32_t> sizes = {},
                            std::vector<std::pair<std::uint32_t, std::uint32_t>> cross = {}) {
  FamilySpec spec;
  spec.family = f;
  for (const auto& [k, v] : scalars) spec.scalars[k] = v;
  spec.sizes = std::move(sizes);
  spec.cross = std::move(cross);
  return spec;
}

/// Parameter string without the family, e.g. "m=4,n=2" or "parts=1:2:3".
inline std::string params_string(const FamilySpec& spec) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ',';
    first = false;
  };
  for (const auto& [k, v] : spec.scalars) {
    sep();
    os << k << '=' << v;
  }
  if (!spec.sizes.empty()) {
    sep();
    os << sizes_key(spec.family) << '=';
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) os << (i ? ":" : "") << spec.sizes[i];
  }
  if (!spec.cross.empty()) {
    sep();
    os << "adj=";
    for (std::size_t i = 0; i < spec.cross.size(); ++i) {
      os << (i ? ":" : "") << spec.cross[i].first << '-' << spec.cross[i].second;
    }
  }
  return os.str();
}

/// `family=<name>;params=<k=v,...>`
inline std::string to_string(const FamilySpec& spec) {
  return "family=" + std::string(to_string(spec.family)) + ";params=" + params_string(spec);
}

namespace detail {

inline std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  if (text.empty() || text.size() > 9 || text.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::InvalidParam, "bad value '" + std::string(text) + "' for " + std::string(what));
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(text)));
}

}  // namespace detail

inline FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  const auto halves = detail::split(text, ';');
  if (halves.empty() || halves.size() > 2 || !halves[0].starts_with("family=")) {
    throw Error(ErrorCode::InvalidParam, "expected 'family=<name>;params=<k=v,...>', got '" + std::string(text) + "'");
  }
  spec.family = parse_family(std::string_view(halves[0]).substr(7));
  if (halves.size() == 1) return spec;
  if (!halves[1].starts_with("params=")) throw Error(ErrorCode::InvalidParam, "expected 'params=' after ';'");
  const std::string body = halves[1].substr(7);
  if (body.empty()) return spec;
  for (const std::string& item : detail::split(body, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidParam, "parameter '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "adj") {
      for (const std::string& pair : detail::split(value, ':')) {
        const auto dash = pair.find('-');
        if (dash == std::string::npos) throw Error(ErrorCode::InvalidParam, "adjacency entry '" + pair + "' lacks '-'");
        spec.cross.emplace_back(detail::parse_u32(pair.substr(0, dash), "adj"),
                                detail::parse_u32(pair.substr(dash + 1), "adj"));
      }
    } else if (key == "parts" || key == "cliques" || key == "cycles") {
      for (const std::string& v : detail::split(value, ':')) spec.sizes.push_back(detail::parse_u32(v, key));
    } else {
      spec.scalars[key] = detail::parse_u32(value, key);
    }
  }
  return spec;
}

/// A generated graph together with its named vertex partitions.
struct LabeledGraph {
  FamilySpec spec;
  Graph graph;
  std::map<std::string, VertexSet> partitions;
};

inline const VertexSet& partition_of(const LabeledGraph& lg, const std::string& name) {
  const auto it = lg.partitions.find(name);
  if (it == lg.partitions.end()) {
    throw Error(ErrorCode::UnknownPartition,
                "family " + std::string(to_string(lg.spec.family)) + " has no partition '" + name + "'");
  }
  return it->second;
}

namespace detail {

class Builder {
 public:
  explicit Builder(std::size_t n) : n_(n) {}

  void edge(std::size_t u, std::size_t v) { pairs_.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v)); }
  void clique(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
  }
  void cycle(const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) edge(vs[i], vs[(i + 1) % vs.size()]);
  }
  void biclique(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex u : a)
      for (Vertex v : b) edge(u, v);
  }
  Graph build() const { return Graph::from_edges(n_, pairs_); }

 private:
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

inline std::vector<Vertex> range(std::size_t begin, std::size_t end) {
  std::vector<Vertex> out;
  for (std::size_t v = begin; v < end; ++v) out.push_back(static_cast<Vertex>(v));
  return out;
}

[[noreturn]] inline void invalid(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::InvalidParam, std::string(to_string(spec.family)) + ": " + why);
}

inline std::uint32_t scalar(const FamilySpec& spec, const std::string& key, std::uint32_t minimum) {
  const auto it = spec.scalars.find(key);
  if (it == spec.scalars.end()) invalid(spec, "missing parameter " + key);
  if (it->second < minimum) invalid(spec, "requires " + key + " >= " + std::to_string(minimum));
  return it->second;
}

inline void expect_keys(const FamilySpec& spec, std::initializer_list<std::string_view> keys, bool sizes,
                        bool cross) {
  for (const auto& [k, v] : spec.scalars) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) invalid(spec, "unexpected parameter " + k);
  }
  if (!sizes && !spec.sizes.empty()) invalid(spec, "takes no size list");
  if (!cross && !spec.cross.empty()) invalid(spec, "takes no adjacency list");
}

// Hard cap on generated order; keeps a typo from allocating gigabytes.
inline constexpr std::size_t kMaxGeneratedVertices = 4096;

inline void check_order(const FamilySpec& spec, std::size_t n) {
  if (n > kMaxGeneratedVertices) invalid(spec, "more than " + std::to_string(kMaxGeneratedVertices) + " vertices");
}

}  // namespace detail

inline LabeledGraph generate(const FamilySpec& spec) {
  using detail::Builder;
  using detail::range;
  LabeledGraph lg;
  lg.spec = spec;
  auto& parts = lg.partitions;

  switch (spec.family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete: {
      detail::expect_keys(spec, {"n"}, false, false);
      const std::uint32_t minimum = spec.family == Family::Cycle ? 3 : 1;
      const std::size_t n = detail::scalar(spec, "n", minimum);
      detail::check_order(spec, n);
      Builder b(n);
      const auto vs = range(0, n);
      if (spec.family == Family::Path) {
        for (std::size_t i = 0; i + 1 < n; ++i) b.edge(i, i + 1);
        parts["V"] = VertexSet::from_range(vs);
      } else if (spec.family == Family::Cycle) {
        b.cycle(vs);
        parts["V"] = VertexSet::from_range(vs);
      } else {
        b.clique(vs);
        parts["clique"] = VertexSet::from_range(vs);
      }
      lg.graph = b.build();
      break;
    }
    case Family::CompleteBipartite:
    case Family::CompleteMultipartite:
    case Family::CompleteBisplit: {
      detail::expect_keys(spec, {}, true, false);
      const bool bip = spec.family == Family::CompleteBipartite;
      const bool tri = spec.family == Family::CompleteBisplit;
      if (bip && spec.sizes.size() != 2) detail::invalid(spec, "requires parts=a:b");
      if (tri && spec.sizes.size() != 3) detail::invalid(spec, "requires parts=x:y:z");
      if (spec.sizes.empty()) detail::invalid(spec, "requires at least one part");
      std::size_t n = 0;
      for (std::uint32_t p : spec.sizes) {
        if (p < 1) detail::invalid(spec, "every part needs at least 1 vertex");
        n += p;
      }
      detail::check_order(spec, n);
      Builder b(n);
      std::vector<std::vector<Vertex>> groups;
      std::size_t start = 0;
      for (std::uint32_t p : spec.sizes) {
        groups.push_back(range(start, start + p));
        start += p;
      }
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j) b.biclique(groups[i], groups[j]);
      for (std::size_t i = 0; i < groups.size(); ++i) {
        std::string name = bip ? std::string(1, static_cast<char>('A' + i))
                               : tri ? std::string(1, static_cast<char>('X' + i)) : "P" + std::to_string(i);
        parts[name] = VertexSet::from_range(groups[i]);
      }
      lg.graph = b.build();
      break;
    }
    case Family::CompleteSun: {
      detail::expect_keys(spec, {"n"}, false, false);
      const std::size_t n = detail::scalar(spec, "n", 3);
      detail::check_order(spec, 2 * n);
      Builder b(2 * n);
      b.clique(range(0, n));
      for (std::size_t j = 0; j < n; ++j) {
        b.edge(n + j, j);
        b.edge(n + j, (j + 1) % n);
      }
      parts["U"] = VertexSet::from_range(range(0, n));
      parts["W"] = VertexSet::from_range(range(n, 2 * n));
      lg.graph = b.build();
      break;
    }
    case Family::Split:
    case Family::CompleteSplit: {
      const bool full = spec.family == Family::CompleteSplit;
      detail::expect_keys(spec, {"r", "s"}, false, !full);
      const std::size_t r = detail::scalar(spec, "r", 1);
      const std::size_t s = detail::scalar(spec, "s", 0);
      detail::check_order(spec, r + s);
      Builder b(r + s);
      b.clique(range(0, r));
      if (full) {
        b.biclique(range(0, r), range(r, r + s));
      } else {
        for (const auto& [i, j] : spec.cross) {
          if (i >= r || j >= s) detail::invalid(spec, "adjacency pair out of range");
          b.edge(i, r + j);
        }
      }
      parts["clique"] = VertexSet::from_range(range(0, r));
      parts["independent"] = VertexSet::from_range(range(r, r + s));
      lg.graph = b.build();
      break;
    }
    case Family::Bisplit: {
      detail::expect_keys(spec, {}, true, true);
      if (spec.sizes.size() != 3) detail::invalid(spec, "requires parts=x:y:z");
      const std::size_t x = spec.sizes[0];
      const std::size_t y = spec.sizes[1];
      const std::size_t z = spec.sizes[2];
      if (y < 1 || z < 1) detail::invalid(spec, "Y and Z need at least 1 vertex");
      detail::check_order(spec, x + y + z);
      Builder b(x + y + z);
      b.biclique(range(x, x + y), range(x + y, x + y + z));
      for (const auto& [i, j] : spec.cross) {
        if (i >= x || j >= y + z) detail::invalid(spec, "adjacency pair out of range");
        b.edge(i, x + j);
      }
      parts["X"] = VertexSet::from_range(range(0, x));
      parts["Y"] = VertexSet::from_range(range(x, x + y));
      parts["Z"] = VertexSet::from_range(range(x + y, x + y + z));
      lg.graph = b.build();
      break;
    }
    case Family::BlockChain:
    case Family::CactusChain: {
      const bool cliques = spec.family == Family::BlockChain;
      detail::expect_keys(spec, {}, true, false);
      if (spec.sizes.empty()) detail::invalid(spec, "requires at least one block");
      std::size_t n = 1;
      for (std::uint32_t k : spec.sizes) {
        if (cliques && k < 2) detail::invalid(spec, "clique sizes must be >= 2");
        if (!cliques && k < 3) detail::invalid(spec, "cycle lengths must be >= 3");
        n += k - 1;
      }
      detail::check_order(spec, n);
      Builder b(n);
      std::size_t start = 0;
      for (std::uint32_t k : spec.sizes) {
        const auto vs = range(start, start + k);
        cliques ? b.clique(vs) : b.cycle(vs);
        start += k - 1;
      }
      parts["V"] = VertexSet::full(n);
      lg.graph = b.build();
      break;
    }
    case Family::Windmill:
    case Family::Friendship: {
      std::size_t n = 3;
      std::size_t r = 0;
      if (spec.family == Family::Windmill) {
        detail::expect_keys(spec, {"n", "r"}, false, false);
        n = detail::scalar(spec, "n", 2);
        r = detail::scalar(spec, "r", 2);
      } else {
        detail::expect_keys(spec, {"r"}, false, false);
        r = detail::scalar(spec, "r", 2);
      }
      const std::size_t order = r * (n - 1) + 1;
      detail::check_order(spec, order);
      Builder b(order);
      for (std::size_t c = 0; c < r; ++c) {
        std::vector<Vertex> blade{0};
        for (Vertex v : range(1 + c * (n - 1), 1 + (c + 1) * (n - 1))) blade.push_back(v);
        b.clique(blade);
      }
      parts["hub"] = VertexSet{0};
      parts["blades"] = VertexSet::from_range(range(1, order));
      lg.graph = b.build();
      break;
    }
    case Family::Wheel:
    case Family::Cone: {
      const bool wheel = spec.family == Family::Wheel;
      wheel ? detail::expect_keys(spec, {"m"}, false, false) : detail::expect_keys(spec, {"m", "n"}, false, false);
      const std::size_t m = detail::scalar(spec, "m", 3);
      const std::size_t apexes = wheel ? 1 : detail::scalar(spec, "n", 1);
      detail::check_order(spec, m + apexes);
      Builder b(m + apexes);
      b.cycle(range(0, m));
      b.biclique(range(0, m), range(m, m + apexes));
      parts[wheel ? "rim" : "cycle"] = VertexSet::from_range(range(0, m));
      parts[wheel ? "hub" : "apex"] = VertexSet::from_range(range(m, m + apexes));
      lg.graph = b.build();
      break;
    }
  }
  return lg;
}

inline LabeledGraph generate(std::string_view spec_text) { return generate(parse_family_spec(spec_text)); }

}  // namespace sparing
