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

// Tabular claim-check reports (aligned text, CSV, JSON).

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sparing/error.hpp"
#include "sparing/formulas.hpp"

namespace sparing {

struct ReportRow {
  std::string family;  // "<claim>:<checked graph>"
  std::string params;
  std::optional<std::uint64_t> formula_value;
  std::uint64_t exact_value = 0;
  Outcome verdict = Outcome::NotApplicable;
  std::uint64_t witness_size = 0;
  std::uint64_t mono_count = 0;
  std::uint64_t runtime_ms = 0;

  bool consistent() const {
    if (exact_value != mono_count) return false;
    if (!formula_value) return verdict == Outcome::NotApplicable;
    return verdict == (*formula_value == exact_value ? Outcome::Match : Outcome::Mismatch);
  }
};

enum class ReportFormat { Text, Csv, Json };

inline ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw Error(ErrorCode::InvalidParam, "unknown format '" + name + "'");
}

/// One row per verdict; the maximal-subdivision claim adds a second row for
/// the induced labeling.
inline std::vector<ReportRow> report_rows(const ClaimVerdict& v) {
  std::vector<ReportRow> rows;
  ReportRow row;
  row.family = v.claim + ":" + v.checked;
  row.params = params_string(v.spec);
  row.formula_value = v.predicted;
  row.exact_value = v.exact;
  row.verdict = v.verdict;
  row.witness_size = v.witness_size;
  row.mono_count = v.mono_count;
  row.runtime_ms = static_cast<std::uint64_t>(std::llround(v.runtime_ms));
  rows.push_back(row);
  if (v.induced) {
    ReportRow induced = row;
    induced.family = v.claim + ":induced_" + v.checked;
    induced.exact_value = v.induced->mono;
    induced.mono_count = v.induced->mono;
    induced.witness_size = v.induced->non_singleton;
    induced.verdict = !v.predicted                       ? Outcome::NotApplicable
                      : *v.predicted == v.induced->mono ? Outcome::Match
                                                         : Outcome::Mismatch;
    rows.push_back(induced);
  }
  return rows;
}

struct ReportSummary {
  std::size_t rows = 0;
  std::size_t match = 0;
  std::size_t mismatch = 0;
  std::size_t not_applicable = 0;
};

inline ReportSummary summarize(const std::vector<ReportRow>& rows) {
  ReportSummary s;
  s.rows = rows.size();
  for (const ReportRow& r : rows) {
    switch (r.verdict) {
      case Outcome::Match: ++s.match; break;
      case Outcome::Mismatch: ++s.mismatch; break;
      case Outcome::NotApplicable: ++s.not_applicable; break;
    }
  }
  return s;
}

namespace detail {

inline std::array<std::string, 8> row_cells(const ReportRow& r) {
  return {r.family,
          r.params,
          r.formula_value ? std::to_string(*r.formula_value) : "-",
          std::to_string(r.exact_value),
          std::string(to_string(r.verdict)),
          std::to_string(r.witness_size),
          std::to_string(r.mono_count),
          std::to_string(r.runtime_ms)};
}

inline constexpr std::array<const char*, 8> kColumns{"family",  "params",       "formula_value", "exact_value",
                                                     "verdict", "witness_size", "mono_count",    "runtime_ms"};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string summary_line(const ReportSummary& s) {
  return "summary: rows=" + std::to_string(s.rows) + " match=" + std::to_string(s.match) +
         " mismatch=" + std::to_string(s.mismatch) + " na=" + std::to_string(s.not_applicable);
}

/// Writes the table followed by the summary line. Text and CSV end with
/// "summary: ..."; JSON carries the same counts in a "summary" object.
inline void write_report(std::ostream& os, const std::vector<ReportRow>& rows, ReportFormat format) {
  const ReportSummary summary = summarize(rows);
  switch (format) {
    case ReportFormat::Csv: {
      for (std::size_t i = 0; i < detail::kColumns.size(); ++i) os << (i ? "," : "") << detail::kColumns[i];
      os << '\n';
      for (const ReportRow& r : rows) {
        const auto cells = detail::row_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << detail::csv_field(cells[i]);
        os << '\n';
      }
      os << summary_line(summary) << '\n';
      break;
    }
    case ReportFormat::Text: {
      std::array<std::size_t, 8> width{};
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = std::string(detail::kColumns[i]).size();
      std::vector<std::array<std::string, 8>> table;
      for (const ReportRow& r : rows) {
        table.push_back(detail::row_cells(r));
        for (std::size_t i = 0; i < width.size(); ++i) width[i] = std::max(width[i], table.back()[i].size());
      }
      auto emit = [&](const auto& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string cell = cells[i];
          if (i + 1 < cells.size()) cell.resize(width[i], ' ');
          line += cell;
          if (i + 1 < cells.size()) line += "  ";
        }
        os << line << '\n';
      };
      std::array<std::string, 8> header;
      for (std::size_t i = 0; i < header.size(); ++i) header[i] = detail::kColumns[i];
      emit(header);
      for (const auto& cells : table) emit(cells);
      os << summary_line(summary) << '\n';
      break;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json doc;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const ReportRow& r : rows) {
        nlohmann::ordered_json row;
        row["family"] = r.family;
        row["params"] = r.params;
        row["formula_value"] = r.formula_value ? nlohmann::ordered_json(*r.formula_value) : nlohmann::ordered_json("-");
        row["exact_value"] = r.exact_value;
        row["verdict"] = std::string(to_string(r.verdict));
        row["witness_size"] = r.witness_size;
        row["mono_count"] = r.mono_count;
        row["runtime_ms"] = r.runtime_ms;
        doc["rows"].push_back(std::move(row));
      }
      doc["summary"] = {{"rows", summary.rows},
                        {"match", summary.match},
                        {"mismatch", summary.mismatch},
                        {"na", summary.not_applicable}};
      os << doc.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace sparing
