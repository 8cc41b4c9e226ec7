// Copyright 2026 The vcsp Authors
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

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vcsp/classify.hpp"
#include "vcsp/errors.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::make_language;
using testing::rel;

Language h5_with(Valuation nu) { return make_language(3, {h5()}, {std::move(nu)}); }

Valuation vals(std::vector<ExtRational> v) { return Valuation(std::move(v)); }

std::vector<Relation> all_unaries(std::size_t n) {
  std::vector<Relation> out;
  for (ValueSet s = 1; s < (ValueSet{1} << n); ++s) out.push_back(Relation::unary(n, s));
  return out;
}

Language conservative(std::size_t n, std::vector<Relation> extra, std::vector<Valuation> delta) {
  auto rels = all_unaries(n);
  for (auto& r : extra) rels.push_back(std::move(r));
  return make_language(n, std::move(rels), std::move(delta));
}

void expect_verifies(const Certificate& c) {
  for (const auto& ch : c.checks) EXPECT_TRUE(ch.ok) << ch.name << ": " << ch.detail;
  auto v = verify_certificate(certificate_to_json(c));
  EXPECT_TRUE(v.ok) << (v.failures.empty() ? "" : v.failures[0]);
  EXPECT_TRUE(v.rederived);
}

TEST(ClassifyMinSol, H5Examples) {
  auto hard = classify_minsol3(h5_with(Valuation::from_ints({0, 3, 4})));
  EXPECT_EQ(hard.verdict, Verdict::kNPHard);
  ASSERT_TRUE(hard.hardness);
  EXPECT_FALSE(hard.hardness->gadgets.empty());
  expect_verifies(hard);

  auto easy = classify_minsol3(h5_with(Valuation::from_ints({0, 1, 2})));
  EXPECT_EQ(easy.verdict, Verdict::kPO);
  ASSERT_TRUE(easy.witness);
  EXPECT_EQ(type_name(*easy.witness), "BSM");
  expect_verifies(easy);
}

TEST(ClassifyMinSol, H5FlipsAtTheMidpoint) {
  // NP-hard iff nu(a) + nu(c) < 2 nu(b); equality stays in PO.
  auto at = classify_minsol3(h5_with(Valuation::from_ints({0, 2, 4})));
  EXPECT_EQ(at.verdict, Verdict::kPO);
  auto above = classify_minsol3(h5_with(vals({Rational(0), make_rational(21, 10), Rational(4)})));
  EXPECT_EQ(above.verdict, Verdict::kNPHard);
  auto below = classify_minsol3(h5_with(vals({Rational(0), make_rational(19, 10), Rational(4)})));
  EXPECT_EQ(below.verdict, Verdict::kPO);
}

TEST(ClassifyMinSol, CrossNeedsTheWeakTournamentPair) {
  auto c = classify_minsol3(
      make_language(3, {pictogram(Pictogram::kCross, 3, 1, 0, 1, 0)}, {Valuation::from_ints({0, 1, 2})}));
  EXPECT_EQ(c.verdict, Verdict::kPO);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(type_name(*c.witness), "GWTP");
  EXPECT_TRUE(c.siggers);
  EXPECT_FALSE(c.search.empty());
  expect_verifies(c);
}

TEST(ClassifyMinSol, StableUnderRelabelling) {
  const std::vector<std::vector<Value>> perms{{1, 2, 0}, {2, 0, 1}, {0, 2, 1}};
  for (auto nu : {Valuation::from_ints({0, 3, 4}), Valuation::from_ints({0, 1, 2})}) {
    Language l = h5_with(nu);
    auto base = classify_minsol3(l).verdict;
    for (const auto& pi : perms) EXPECT_EQ(classify_minsol3(testing::permute(l, pi)).verdict, base);
  }
}

TEST(ClassifyMinSol, Unsupported) {
  EXPECT_EQ(classify_minsol3(make_language(4, {}, {Valuation::from_ints({0, 1, 2, 3})})).verdict,
            Verdict::kUnsupported);
  EXPECT_EQ(classify_minsol3(h5_with(Valuation::from_ints({0, 1, 1}))).verdict, Verdict::kUnsupported);
  auto two = make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2}), Valuation::from_ints({2, 1, 0})});
  EXPECT_EQ(classify_minsol3(two).verdict, Verdict::kUnsupported);
}

TEST(Certificate, JsonRoundTrip) {
  for (auto nu : {Valuation::from_ints({0, 3, 4}), Valuation::from_ints({0, 1, 2})}) {
    auto c = classify_minsol3(h5_with(nu));
    Json j = certificate_to_json(c);
    EXPECT_EQ(certificate_to_json(certificate_from_json(j)).dump(), j.dump());
  }
  EXPECT_THROW(certificate_from_json(Json::parse(R"({"schema_version": 1})")), ParseError);
}

TEST(Certificate, MutatedWitnessFailsVerification) {
  auto c = classify_minsol3(h5_with(Valuation::from_ints({0, 1, 2})));
  Json j = certificate_to_json(c);
  ASSERT_TRUE(verify_certificate(j).ok);
  for (std::size_t cell : {1u, 5u, 7u}) {
    Json bad = j;
    auto& t = bad["witness"]["meet"][cell];
    t = t.get<std::string>() == "a" ? "c" : "a";
    auto v = verify_certificate(bad);
    EXPECT_FALSE(v.ok) << "cell " << cell;
  }
  Json bad = j;
  bad["verdict"] = "NP-hard";
  EXPECT_FALSE(verify_certificate(bad).ok);
  auto v = verify_certificate(Json::parse(R"([1, 2])"));
  EXPECT_FALSE(v.ok);
  EXPECT_FALSE(v.failures.empty());
}

TEST(ClassifyConservative, Examples) {
  auto cross = classify_conservative(
      conservative(2, {pictogram(Pictogram::kCross, 2, 1, 0, 1, 0)}, {Valuation::from_ints({0, 1})}));
  EXPECT_EQ(cross.verdict, Verdict::kPO);
  expect_verifies(cross);

  auto free = classify_conservative(conservative(3, {}, {Valuation::from_ints({0, 1, 2})}));
  EXPECT_EQ(free.verdict, Verdict::kPO);
  expect_verifies(free);

  auto hard = classify_conservative(conservative(3, {h5()}, {Valuation::from_ints({0, 3, 4})}));
  EXPECT_EQ(hard.verdict, Verdict::kNPHard);
  ASSERT_TRUE(hard.hardness);
  expect_verifies(hard);
}

TEST(ClassifyConservative, BipartiteTournamentGraph) {
  // x <= y on {a,b} has min and max but, with both orientations of the
  // cost, no dominating fpol: both (a,b) and (b,a) land in M.
  Language l = conservative(2, {rel(2, {"aa", "ab", "bb"})},
                            {Valuation::from_ints({0, 1}), Valuation::from_ints({1, 0})});
  auto c = classify_conservative(l);
  ASSERT_EQ(c.verdict, Verdict::kPO) << c.explanation;
  ASSERT_TRUE(c.analysis);
  EXPECT_EQ(c.analysis->M.size(), 2u);
  EXPECT_EQ(c.analysis->edges.size(), 1u);
  EXPECT_TRUE(c.analysis->odd_cycle.empty());
  expect_verifies(c);

  auto failing = [](const Certificate& cert) {
    auto checks = run_checks(cert);
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& r) { return !r.ok; });
  };
  Certificate bad = c;
  bad.analysis->side.assign(bad.analysis->side.size(), 0);
  EXPECT_TRUE(failing(bad));
  bad = c;
  bad.analysis->odd_cycle = {bad.analysis->M[0]};
  EXPECT_TRUE(failing(bad));
  bad = c;
  bad.analysis->edges.clear();
  EXPECT_TRUE(failing(bad));
  bad = c;
  bad.analysis->A = bad.analysis->B;
  EXPECT_TRUE(failing(bad));
}

TEST(ClassifyConservative, Contract) {
  EXPECT_THROW(classify_conservative(h5_with(Valuation::from_ints({0, 1, 2}))), ContractError);
  auto six = classify_conservative(conservative(6, {}, {Valuation::from_ints({0, 1, 2, 3, 4, 5})}));
  EXPECT_EQ(six.verdict, Verdict::kUnsupported);
}

}  // namespace
}  // namespace vcsp
