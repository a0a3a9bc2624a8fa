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

// Labeling documents:
//   {"vertices":<n>,"labels":{"0":[...],"1":[...],...}}
// keys in index order, every index 0..n-1 present, one line.

#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "sparing/error.hpp"
#include "sparing/setlabel.hpp"

namespace sparing {

inline std::string labeling_to_json(const Labeling& f, std::size_t vertex_count) {
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (Vertex v = 0; v < vertex_count; ++v) labels[std::to_string(v)] = f.at(v).values();
  nlohmann::ordered_json doc;
  doc["vertices"] = vertex_count;
  doc["labels"] = std::move(labels);
  return doc.dump() + "\n";
}

/// Returns the labeling and its declared vertex count.
inline std::pair<Labeling, std::size_t> labeling_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("labeling is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("labels") ||
      !doc["vertices"].is_number_unsigned() || !doc["labels"].is_object()) {
    throw Error(ErrorCode::ParseError, "labeling needs an unsigned \"vertices\" and an object \"labels\"");
  }
  const auto n = doc["vertices"].get<std::size_t>();
  const auto& labels = doc["labels"];
  Labeling f;
  for (const auto& [key, value] : labels.items()) {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(key, &used);
      if (used != key.size() || std::to_string(index) != key) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "label key '" + key + "' is not a vertex index");
    }
    if (index >= n) throw Error(ErrorCode::ParseError, "label key " + key + " is out of range");
    if (!value.is_array() || value.empty()) {
      throw Error(ErrorCode::ParseError, "label of vertex " + key + " must be a non-empty array");
    }
    std::vector<IntegerSet::Value> elements;
    for (const auto& x : value) {
      if (!x.is_number_unsigned()) {
        throw Error(ErrorCode::ParseError, "label of vertex " + key + " must hold non-negative integers");
      }
      elements.push_back(x.get<IntegerSet::Value>());
    }
    f.assign(static_cast<Vertex>(index), IntegerSet(std::move(elements)));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!f.has(v)) throw Error(ErrorCode::ParseError, "labeling missing vertex " + std::to_string(v));
  }
  return {std::move(f), n};
}

inline std::pair<Labeling, std::size_t> load_labeling(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open labeling file '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return labeling_from_json(text);
}

}  // namespace sparing
