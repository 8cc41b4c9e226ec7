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

#include <random>

#include "test_support.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/types.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::make_language;
using testing::rel;

// Every binary table, checked literally against both GMC conditions.
bool brute_force_gmc(const Language& l) {
  const std::size_t n = l.domain_size();
  std::size_t cells = n * n, total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= n;
  const auto gamma = l.relations();
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Value> t(cells);
    std::size_t c = code;
    for (auto& v : t) {
      v = c % n;
      c /= n;
    }
    Operation f(n, 2, t);
    bool ok = true;
    for (const auto& nu : l.valuations())
      for (Value a = 0; a < n && ok; ++a) {
        ok = nu(f(a, a)) <= nu(a);
        for (Value b = 0; b < n && ok; ++b) {
          if (a == b) continue;
          if (nu(f(a, b)) >= std::max(nu(a), nu(b))) ok = nu(f(b, a)) < std::min(nu(a), nu(b));
        }
      }
    if (ok && is_polymorphism(f, gamma)) return true;
  }
  return false;
}

TEST(Gmc, Examples) {
  Language empty = make_language(3, {}, {Valuation::from_ints({0, 1, 2})});
  auto w = is_gmc(empty);
  ASSERT_TRUE(w);
  EXPECT_TRUE(validate_witness(empty, *w).ok());
  EXPECT_TRUE(validate_witness(empty, GmcWitness{Operation::constant(3, 2, 0)}).ok());

  Language cross = make_language(2, {pictogram(Pictogram::kCross, 2, 0, 1, 0, 1)},
                                 {Valuation::from_ints({0, 1})});
  EXPECT_FALSE(is_gmc(cross));
  OperationConstraint any(2, 2);
  auto pols = enumerate_binary_polymorphisms(cross.relations(), any);
  EXPECT_EQ(pols.size(), 4u);
  for (const auto& f : pols) EXPECT_FALSE(validate_witness(cross, GmcWitness{f}).ok());

  auto pr1 = validate_witness(empty, GmcWitness{Operation::projection(3, 2, 0)});
  EXPECT_FALSE(pr1.ok());
}

TEST(Gmc, AgreesWithTableEnumeration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    Language l = testing::random_minsol_language(rng);
    auto w = is_gmc(l);
    EXPECT_EQ(w.has_value(), brute_force_gmc(l)) << "trial " << trial;
    if (w) EXPECT_TRUE(validate_witness(l, *w).ok());
  }
}

TEST(GeneralisedMinClosed, Examples) {
  Valuation nu = Valuation::from_ints({0, 3, 4});
  EXPECT_FALSE(check_generalised_min_closed(h5(), nu));
  EXPECT_TRUE(check_generalised_min_closed(Relation::full(3, 2), nu));
  EXPECT_TRUE(check_generalised_min_closed(rel(3, {"cc"}), nu));
  EXPECT_THROW(check_generalised_min_closed(h5(), Valuation::from_ints({0, 0, 1})),
               ContractError);
}

TEST(Bsm, Examples) {
  Language easy = make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2})});
  auto w = is_bsm(easy);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->b, 1);
  EXPECT_TRUE(validate_witness(easy, *w).ok());

  Language hard = make_language(3, {h5()}, {Valuation::from_ints({0, 3, 4})});
  EXPECT_FALSE(is_bsm(hard));

  Language empty = make_language(3, {}, {Valuation::from_ints({0, 2, 4})});
  auto e = is_bsm(empty);
  ASSERT_TRUE(e);
  EXPECT_TRUE(validate_witness(empty, *e).ok());
  EXPECT_FALSE(is_bsm(make_language(2, {}, {Valuation::from_ints({0, 1})})));
}

TEST(Bsm, WitnessRejectsBrokenTables) {
  Language easy = make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2})});
  auto w = *is_bsm(easy);
  auto t = w.meet.table();
  t[0 * 3 + 2] = 0;  // a meet c
  BsmWitness bad = w;
  bad.meet = Operation(3, 2, t);
  EXPECT_FALSE(validate_witness(easy, bad).ok());
  Language shifted = make_language(3, {h5()}, {Valuation::from_ints({0, 3, 4})});
  EXPECT_FALSE(validate_witness(shifted, w).ok());
}

TEST(Gwtp, Examples) {
  Language cross = make_language(2, {pictogram(Pictogram::kCross, 2, 1, 0, 1, 0)},
                                 {Valuation::from_ints({0, 1})});
  auto s = is_gwtp(cross);
  ASSERT_TRUE(s.witness);
  EXPECT_TRUE(validate_witness(cross, *s.witness).ok());

  Language hard = make_language(3, {h5()}, {Valuation::from_ints({0, 3, 4})});
  auto h = is_gwtp(hard);
  EXPECT_FALSE(h.witness);
  EXPECT_FALSE(h.reason.empty());
  EXPECT_THROW(is_gwtp(make_language(4, {}, {Valuation::from_ints({0, 1, 2, 3})})),
               ContractError);
}

TEST(Gwtp, CorruptedWitnessNamesClause) {
  // x <= y has no Mal'tsev polymorphism, so {a,b} lands in B with min and max.
  Language leq = make_language(2, {rel(2, {"aa", "ab", "bb"})}, {Valuation::from_ints({0, 1})});
  auto w = *is_gwtp(leq).witness;
  ASSERT_EQ(w.B, std::vector<Pair>{Pair(0, 1)});
  ASSERT_TRUE(w.A.empty());
  ASSERT_TRUE(validate_witness(leq, w).ok());
  GwtpWitness bad = w;
  bad.f2 = bad.f1;
  auto r = validate_witness(leq, bad);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations[0].find("agree"), std::string::npos);
  bad = w;
  bad.B.clear();
  r = validate_witness(leq, bad);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.violations[0].find("projection"), std::string::npos);
  bad = w;
  bad.subsets.pop_back();
  EXPECT_FALSE(validate_witness(leq, bad).ok());
  bad = w;
  bad.m = Operation::constant(2, 3, 0);
  EXPECT_FALSE(validate_witness(leq, bad).ok());
}

TEST(Gwtp, RandomWitnessesValidate) {
  std::mt19937_64 rng(21);
  int found = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Language l = testing::random_language(rng, 2);
    auto s = is_gwtp(l);
    if (!s.witness) continue;
    ++found;
    auto r = validate_witness(l, *s.witness);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.violations[0]);
  }
  EXPECT_GT(found, 0);
}

TEST(Siggers, Examples) {
  EXPECT_TRUE(csp_tractable({}, 3));
  auto s = find_siggers({}, 2);
  ASSERT_TRUE(s);
  EXPECT_TRUE(is_siggers(*s));

  // Majority-closed: x <= y on {0,1} together with all unary relations.
  std::vector<Relation> conservative{rel(2, {"aa", "ab", "bb"}), rel(2, {"a"}), rel(2, {"b"})};
  auto m = find_siggers(conservative, 2);
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_siggers(*m));
  EXPECT_TRUE(is_polymorphism(*m, conservative));

  Relation one_in_three = rel(2, {"baa", "aba", "aab"});
  EXPECT_FALSE(csp_tractable({one_in_three, rel(2, {"a"}), rel(2, {"b"})}, 2));
  EXPECT_FALSE(is_siggers(Operation::projection(2, 4, 0)));
}

TEST(PairOperations, ConservativeExamples) {
  std::vector<Relation> unaries;
  for (ValueSet s = 1; s < 8; ++s) unaries.push_back(Relation::unary(3, s));
  auto free = conservative_pair_operations(unaries, 3);
  EXPECT_FALSE(free.missing);
  EXPECT_EQ(free.operations.size(), 3u);
  for (const auto& p : free.operations) EXPECT_TRUE(acts_as(p.op, p.kind, p.pair));

  auto hard = unaries;
  hard.push_back(rel(3, {"baa", "aba", "aab"}));
  auto h = conservative_pair_operations(hard, 3);
  ASSERT_TRUE(h.missing);
  EXPECT_EQ(*h.missing, Pair(0, 1));

  EXPECT_TRUE(has_icc_pair(unaries, 3, {0, 1}));
  auto crossed = unaries;
  crossed.push_back(pictogram(Pictogram::kCross, 3, 0, 1, 0, 1));
  EXPECT_FALSE(has_icc_pair(crossed, 3, {0, 1}));
}

}  // namespace
}  // namespace vcsp
