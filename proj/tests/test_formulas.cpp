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

#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sparing;
using sparing::testing::code_of;

namespace {

std::uint64_t predict(const std::string& claim, const std::string& spec) {
  const LabeledGraph lg = generate(spec);
  return predicted_value(find_claim(claim), lg.spec, &lg);
}

}  // namespace

TEST_CASE("catalog", "[formulas]") {
  CHECK(catalog().size() == 16);
  std::set<std::string> codes;
  for (const Claim& c : catalog()) codes.insert(c.code);
  CHECK(codes.size() == 16);
  CHECK(find_claim("C1").id == ClaimId::Complete);
  CHECK(code_of([] { find_claim("C99"); }) == ErrorCode::UnknownClaim);

  CHECK(predicted_value(find_claim("C1"), make_spec(Family::Complete, {{"n", 5}})) == 6);
  CHECK(predicted_value(find_claim("C16"), make_spec(Family::Cone, {{"m", 7}, {"n", 3}})) == 7);
}

TEST_CASE("predicted_value examples", "[formulas]") {
  CHECK(predict("C9", "family=block_chain;params=cliques=3:4") == 4);
  CHECK(predict("C8", "family=complete_bisplit;params=parts=2:2:5") == 4);
  CHECK(predict("C8", "family=complete_multipartite;params=parts=5:2:2") == 4);
  CHECK(predict("C4", "family=complete_sun;params=n=4") == 5);
  CHECK(predict("C6", "family=complete_split;params=r=4,s=2") == 6);
  CHECK(predict("C10", "family=windmill;params=n=4,r=3") == 9);
  CHECK(predict("C11", "family=friendship;params=r=3") == 3);
  CHECK(predict("C14", "family=cactus_chain;params=cycles=3:4:5") == 2);
  CHECK(predict("C15", "family=wheel;params=m=6") == 3);
  CHECK(predict("C15", "family=wheel;params=m=7") == 3);
  CHECK(predict("C12", "family=complete;params=n=3") == 2);
  // K_3: every clique vertex lies on the single triangle
  CHECK(predict("C5", "family=complete_split;params=r=3,s=0") == 1);
}

TEST_CASE("bisplit prediction counts cross paths through the smallest part", "[formulas]") {
  // Y = {1}, X = {0}, Z = {2,3}; Y-Z complete, cross edge 0-1 only.
  const LabeledGraph lg = generate("family=bisplit;params=parts=1:1:2,adj=0-0");
  // smallest part is X (first of the ties); its vertex 0 sees one Y and no Z
  CHECK(predicted_value(find_claim("C7"), lg.spec, &lg) == 0);
  const LabeledGraph full = generate("family=complete_bisplit;params=parts=1:2:3");
  CHECK(predicted_value(find_claim("C7"), full.spec, &full) == 6);
}

TEST_CASE("predicted_value errors", "[formulas]") {
  CHECK(code_of([] { predicted_value(find_claim("C5"), random::random_split(3, 2, 0.5, 1)); }) ==
        ErrorCode::MissingGraph);
  CHECK(code_of([] { predicted_value(find_claim("C12"), make_spec(Family::Cycle, {{"n", 3}})); }) ==
        ErrorCode::MissingGraph);
  CHECK(code_of([] { predicted_value(find_claim("C2"), make_spec(Family::Cycle, {{"n", 4}})); }) ==
        ErrorCode::DomainError);
  CHECK(code_of([] { predicted_value(find_claim("C1"), make_spec(Family::Cycle, {{"n", 4}})); }) ==
        ErrorCode::DomainError);
  CHECK(code_of([] { predict("C16", "family=cone;params=m=4,n=1"); }) == ErrorCode::DomainError);
  CHECK(code_of([] { predict("C3", "family=cycle;params=n=5"); }) == ErrorCode::DomainError);
  CHECK(code_of([] { predict("C14", "family=complete;params=n=4"); }) == ErrorCode::DomainError);
}

TEST_CASE("check_claim examples", "[formulas]") {
  const ClaimVerdict c1 = check_claim(find_claim("C1"), make_spec(Family::Complete, {{"n", 5}}));
  CHECK(c1.predicted == std::optional<std::uint64_t>{6});
  CHECK(c1.exact == 6);
  CHECK(c1.verdict == Outcome::Match);

  const ClaimVerdict c16 = check_claim(find_claim("C16"), make_spec(Family::Cone, {{"m", 4}, {"n", 2}}));
  CHECK(c16.predicted == std::optional<std::uint64_t>{4});
  CHECK(c16.exact == 4);
  CHECK(c16.verdict == Outcome::Match);

  const ClaimVerdict c15 = check_claim(find_claim("C15"), make_spec(Family::Wheel, {{"m", 5}}));
  CHECK(c15.predicted == std::optional<std::uint64_t>{2});
  CHECK(c15.exact == 4);
  CHECK(c15.verdict == Outcome::Mismatch);

  const ClaimVerdict na = check_claim(find_claim("C2"), make_spec(Family::Cycle, {{"n", 6}}));
  CHECK_FALSE(na.predicted.has_value());
  CHECK(na.verdict == Outcome::NotApplicable);
  CHECK(na.exact == 0);
}

TEST_CASE("shadow and subdivision checks solve the derived graph", "[formulas]") {
  const ClaimVerdict shadow_k3 = check_claim(find_claim("C12"), make_spec(Family::Complete, {{"n", 3}}));
  CHECK(shadow_k3.checked == "shadow(complete)");
  CHECK(shadow_k3.predicted == std::optional<std::uint64_t>{2});
  CHECK(shadow_k3.exact == sparing_bruteforce(shadow(generate("family=complete;params=n=3").graph)).value);

  // subdividing K_3's mono edge leaves C_4
  const ClaimVerdict sub_k3 = check_claim(find_claim("C13"), make_spec(Family::Complete, {{"n", 3}}));
  CHECK(sub_k3.checked == "maximal_subdivision(complete)");
  CHECK(sub_k3.exact == 0);
  REQUIRE(sub_k3.induced.has_value());
  CHECK(sub_k3.induced->weak_ok);
}

TEST_CASE("shadow doubling holds with zero on trees", "[formulas][property]") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph tree = random::random_tree(n, seed);
      const std::uint64_t predicted = 2 * sparing_exact(tree).value;
      CHECK(predicted == 0);
      CHECK(sparing_exact(shadow(tree)).value == 0);
    }
  }
  for (const ClaimVerdict& v : [] {
         std::vector<ClaimVerdict> out;
         for (const FamilySpec& spec : claim_points(find_claim("C12"), {Family::Path, {}, {}, 1}))
           out.push_back(check_claim(find_claim("C12"), spec));
         return out;
       }()) {
    CHECK(v.verdict == Outcome::Match);
    CHECK(v.exact == 0);
  }
}

TEST_CASE("sound claims match across their default points", "[formulas][property]") {
  for (const std::string code : {"C1", "C2", "C3", "C8", "C9", "C10", "C11", "C16"}) {
    const Claim& claim = find_claim(code);
    const auto points = claim_points(claim);
    CHECK_FALSE(points.empty());
    for (const FamilySpec& spec : points) {
      INFO(code << " " << to_string(spec));
      CHECK(check_claim(claim, spec).verdict == Outcome::Match);
    }
  }
}

TEST_CASE("report rows are consistent and C13 reports both readings", "[formulas][report]") {
  const ClaimVerdict v = check_claim(find_claim("C13"), make_spec(Family::Cycle, {{"n", 5}}));
  const auto rows = report_rows(v);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].family == "C13:maximal_subdivision(cycle)");
  CHECK(rows[1].family.rfind("C13:induced_", 0) == 0);
  for (const ReportRow& r : rows) CHECK(r.consistent());

  std::ostringstream csv;
  write_report(csv, rows, ReportFormat::Csv);
  CHECK(csv.str().rfind("family,params,formula_value,exact_value,verdict,witness_size,mono_count,runtime_ms\n", 0) ==
        0);
  CHECK(summarize(rows).rows == 2);
}
