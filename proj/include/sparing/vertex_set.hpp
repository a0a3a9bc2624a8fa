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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace sparing {

using Vertex = std::uint32_t;

/// Growable bitset over vertex indices. Trailing zero words are trimmed so
/// that equality is set equality regardless of how the set was built.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }
  template <typename Range>
  static VertexSet from_range(const Range& members) {
    VertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }
  /// {0, 1, ..., n-1}
  static VertexSet full(std::size_t n) {
    VertexSet s;
    s.words_.assign((n + kWordBits - 1) / kWordBits, ~Word{0});
    if (n % kWordBits != 0) s.words_.back() = (Word{1} << (n % kWordBits)) - 1;
    s.trim();
    return s;
  }

  bool contains(Vertex v) const {
    const std::size_t w = v / kWordBits;
    return w < words_.size() && ((words_[w] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v) {
    const std::size_t w = v / kWordBits;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    const std::size_t w = v / kWordBits;
    if (w >= words_.size()) return;
    words_[w] &= ~(Word{1} << (v % kWordBits));
    trim();
  }

  bool empty() const { return words_.empty(); }
  std::size_t size() const {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  std::optional<Vertex> max() const {
    if (words_.empty()) return std::nullopt;
    const Word top = words_.back();
    return static_cast<Vertex>((words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top)));
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      for (Word bits = words_[w]; bits != 0; bits &= bits - 1) {
        fn(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
  }
  /// Members in increasing order.
  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::size_t count_common(const VertexSet& other) const {
    std::size_t total = 0;
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }
  bool intersects(const VertexSet& other) const { return count_common(other) != 0; }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const Word theirs = i < other.words_.size() ? other.words_[i] : 0;
      if ((words_[i] & ~theirs) != 0) return false;
    }
    return true;
  }

  VertexSet& operator&=(const VertexSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
  }
  VertexSet& operator|=(const VertexSet& other) {
    if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& other) {
    const std::size_t n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  const std::vector<Word>& words() const { return words_; }

 private:
  void trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
  }

  std::vector<Word> words_;
};

}  // namespace sparing
