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

// Command-line front end. Kept in a header so the test suite can drive the
// commands in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// limit.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparing/sparing.hpp"

namespace sparing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitLimit = 3;

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge: return kExitLimit;
    case ErrorCode::CertificationFailed: return kExitViolated;
    default: return kExitInput;
  }
}

/// Raw graph-source flags; scalar values may hold ranges for `check`.
struct SourceFlags {
  std::string graph_file;
  std::string spec;
  std::string family;
  std::string n, r, m, s;
  std::string parts, cliques, cycles, adj;
};

namespace detail {

inline std::vector<std::uint32_t> parse_list(const std::string& text, const std::string& flag) {
  std::vector<std::uint32_t> out;
  for (const std::string& item : sparing::detail::split(text, ',')) {
    out.push_back(sparing::detail::parse_u32(item, flag));
  }
  return out;
}

/// "a..b", "a,b,c" or "a".
inline std::vector<std::uint32_t> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) return parse_list(text, flag);
  const std::uint32_t lo = sparing::detail::parse_u32(text.substr(0, dots), flag);
  const std::uint32_t hi = sparing::detail::parse_u32(text.substr(dots + 2), flag);
  if (lo > hi) throw Error(ErrorCode::InvalidParam, "empty range '" + text + "' for " + flag);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

inline void add_source_options(CLI::App* cmd, SourceFlags& f) {
  cmd->add_option("--graph", f.graph_file, "graph file (p/e text format)");
  cmd->add_option("--spec", f.spec, "family=<name>;params=<k=v,...>");
  cmd->add_option("--family", f.family, "graph family name");
  cmd->add_option("--n", f.n, "family parameter n");
  cmd->add_option("--r", f.r, "family parameter r");
  cmd->add_option("--m", f.m, "family parameter m");
  cmd->add_option("--s", f.s, "family parameter s");
  cmd->add_option("--parts", f.parts, "part sizes a,b,...");
  cmd->add_option("--cliques", f.cliques, "clique orders n1,n2,...");
  cmd->add_option("--cycles", f.cycles, "cycle lengths l1,l2,...");
  cmd->add_option("--adj", f.adj, "split/bisplit cross adjacency i-j,i-j,...");
}

inline FamilySpec spec_from_flags(const SourceFlags& f) {
  if (!f.spec.empty()) return parse_family_spec(f.spec);
  FamilySpec spec;
  spec.family = parse_family(f.family);
  const std::pair<const char*, const std::string*> scalars[] = {{"n", &f.n}, {"r", &f.r}, {"m", &f.m}, {"s", &f.s}};
  for (const auto& [key, value] : scalars) {
    if (!value->empty()) spec.scalars[key] = sparing::detail::parse_u32(*value, std::string("--") + key);
  }
  for (const std::string* list : {&f.parts, &f.cliques, &f.cycles}) {
    if (!list->empty()) spec.sizes = parse_list(*list, "size list");
  }
  if (!f.adj.empty()) {
    for (const std::string& pair : sparing::detail::split(f.adj, ',')) {
      const auto dash = pair.find('-');
      if (dash == std::string::npos) throw Error(ErrorCode::InvalidParam, "--adj entry '" + pair + "' lacks '-'");
      spec.cross.emplace_back(sparing::detail::parse_u32(pair.substr(0, dash), "--adj"),
                              sparing::detail::parse_u32(pair.substr(dash + 1), "--adj"));
    }
  }
  return spec;
}

struct Source {
  Graph graph;
  std::optional<LabeledGraph> labeled;
};

inline Source load_source(const SourceFlags& f) {
  if (!f.graph_file.empty()) {
    if (!f.family.empty() || !f.spec.empty()) {
      throw Error(ErrorCode::InvalidParam, "give either --graph or a family, not both");
    }
    return {load_graph(f.graph_file), std::nullopt};
  }
  if (f.family.empty() && f.spec.empty()) throw Error(ErrorCode::InvalidParam, "no graph: use --graph or --family");
  LabeledGraph lg = generate(spec_from_flags(f));
  Graph g = lg.graph;
  return {std::move(g), std::move(lg)};
}

template <typename Range>
std::string bracketed(const Range& items) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& item : items) {
    os << (first ? "" : ",") << item;
    first = false;
  }
  os << ']';
  return os.str();
}

inline unsigned default_threads() {
  if (const char* env = std::getenv("SPARING_THREADS")) {
    try {
      const unsigned long v = std::stoul(env);
      if (v > 0 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

}  // namespace detail

inline std::string render_solution(const SparingResult& r) {
  return "phi=" + std::to_string(r.value) + " witness=" + detail::bracketed(r.witness.to_vector()) +
         " mono=" + detail::bracketed(r.mono);
}

inline int cmd_generate(const SourceFlags& flags, const std::string& out_file, std::ostream& out) {
  const detail::Source src = detail::load_source(flags);
  std::ostringstream text;
  if (src.labeled) {
    text << "# " << to_string(src.labeled->spec) << '\n';
    for (const auto& [name, members] : src.labeled->partitions) {
      text << "# partition " << name << ' ' << detail::bracketed(members.to_vector()) << '\n';
    }
  }
  write_graph(text, src.graph);
  if (out_file.empty()) {
    out << text.str();
  } else {
    detail::write_text_file(out_file, text.str());
  }
  return kExitOk;
}

inline int cmd_solve(const SourceFlags& flags, unsigned threads, std::ostream& out) {
  const detail::Source src = detail::load_source(flags);
  const SparingResult r = sparing_exact(src.graph, {threads});
  out << render_solution(r) << '\n';
  return kExitOk;
}

inline int cmd_certify(const SourceFlags& flags, const std::string& out_file, unsigned threads, std::ostream& out) {
  const detail::Source src = detail::load_source(flags);
  const auto [result, labeling] = solve_and_certify(src.graph, {threads});
  const std::string doc = labeling_to_json(labeling, src.graph.vertex_count());
  const std::size_t mono = mono_edges(src.graph, labeling).size();
  const bool verified = verify_weak(src.graph, labeling).ok();
  out << "phi=" << result.value << " mono=" << mono << " verified=" << (verified ? "true" : "false") << '\n';
  if (out_file.empty()) {
    out << doc;
  } else {
    detail::write_text_file(out_file, doc);
  }
  return verified ? kExitOk : kExitViolated;
}

inline int cmd_verify(const SourceFlags& flags, const std::string& labeling_file, std::ostream& out) {
  const detail::Source src = detail::load_source(flags);
  if (labeling_file.empty()) throw Error(ErrorCode::InvalidParam, "verify needs --labeling FILE");
  const auto [labeling, declared] = load_labeling(labeling_file);
  if (declared != src.graph.vertex_count()) {
    throw Error(ErrorCode::ParseError, "labeling has " + std::to_string(declared) + " vertices, graph has " +
                                           std::to_string(src.graph.vertex_count()));
  }
  const Verdict verdict = verify_weak(src.graph, labeling);
  if (verdict.ok()) {
    out << "weak-IASI: ok, mono=" << mono_edges(src.graph, labeling).size() << '\n';
    return kExitOk;
  }
  out << "weak-IASI: violated\n";
  for (const Failure& f : verdict.failures) out << f << '\n';
  return kExitViolated;
}

struct CheckFlags {
  std::vector<std::string> claims;
  SourceFlags source;
  std::string format = "text";
  std::uint64_t seed = 1;
};

/// Report rows for every requested claim, in catalog order then point order.
inline std::vector<ReportRow> check_rows(const CheckFlags& flags, unsigned threads) {
  std::vector<const Claim*> selected;
  if (flags.claims.empty()) {
    for (const Claim& c : catalog()) selected.push_back(&c);
  } else {
    for (const std::string& group : flags.claims) {
      for (const std::string& code : sparing::detail::split(group, ',')) selected.push_back(&find_claim(code));
    }
  }
  PointQuery q;
  q.seed = flags.seed;
  const SourceFlags& f = flags.source;
  if (!f.family.empty()) q.family = parse_family(f.family);
  const std::pair<const char*, const std::string*> scalars[] = {{"n", &f.n}, {"r", &f.r}, {"m", &f.m}, {"s", &f.s}};
  for (const auto& [key, value] : scalars) {
    if (!value->empty()) q.ranges[key] = detail::parse_range(*value, std::string("--") + key);
  }
  for (const std::string* list : {&f.parts, &f.cliques, &f.cycles}) {
    if (!list->empty()) q.sizes = detail::parse_list(*list, "size list");
  }

  std::vector<ReportRow> rows;
  for (const Claim* claim : selected) {
    for (const FamilySpec& point : claim_points(*claim, q)) {
      for (ReportRow& row : report_rows(check_claim(*claim, point, {threads}))) rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline int cmd_check(const CheckFlags& flags, unsigned threads, std::ostream& out) {
  const ReportFormat format = parse_report_format(flags.format);
  write_report(out, check_rows(flags, threads), format);
  return kExitOk;
}

/// Parses argv and dispatches. Never throws; errors go to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparing numbers of weak IASI graphs: generate, solve, certify, verify, check."};
  app.require_subcommand(1);
  unsigned threads = detail::default_threads();
  app.add_option("--threads", threads, "solver threads (default: SPARING_THREADS or 1)")->check(CLI::Range(1, 1024));

  SourceFlags gen_flags, solve_flags, certify_flags, verify_flags;
  std::string gen_out, certify_out, labeling_file;
  CheckFlags check_flags;

  auto* gen = app.add_subcommand("generate", "write a family graph in p/e text format");
  detail::add_source_options(gen, gen_flags);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "exact sparing number with its witness");
  detail::add_source_options(solve, solve_flags);

  auto* certify = app.add_subcommand("certify", "solve and emit a verified witness labeling");
  detail::add_source_options(certify, certify_flags);
  certify->add_option("--out", certify_out, "labeling output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check a labeling for the weak IASI conditions");
  detail::add_source_options(verify, verify_flags);
  verify->add_option("--labeling", labeling_file, "labeling JSON file");

  auto* check = app.add_subcommand("check", "compare catalogued formulas with exact values");
  check->add_option("--claim", check_flags.claims, "claim ids, e.g. C1 or C4,C6 (default all)");
  detail::add_source_options(check, check_flags.source);
  check->add_option("--format", check_flags.format, "text, csv or json");
  check->add_option("--seed", check_flags.seed, "seed for sampled split/bisplit instances");

  for (auto* cmd : {gen, solve, certify, verify, check}) cmd->add_option("--threads", threads, "solver threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*gen) return cmd_generate(gen_flags, gen_out, out);
    if (*solve) return cmd_solve(solve_flags, threads, out);
    if (*certify) return cmd_certify(certify_flags, certify_out, threads, out);
    if (*verify) return cmd_verify(verify_flags, labeling_file, out);
    if (*check) return cmd_check(check_flags, threads, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitInput;
}

}  // namespace sparing::cli
