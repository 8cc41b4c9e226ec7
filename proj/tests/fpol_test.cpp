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
#include "vcsp/brute_force.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/fpol.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::make_language;

Relation cross2() { return pictogram(Pictogram::kCross, 2, 0, 1, 0, 1); }

TEST(Fpol, ValidateExamples) {
  Relation leq = testing::rel(3, {"aa", "ab", "ac", "bb", "bc", "cc"});
  Language l = make_language(3, {leq}, {Valuation::from_ints({0, 1, 2})});
  Operation mn = Operation::from_function(3, 2, [](auto x) { return std::min(x[0], x[1]); });
  Operation mx = Operation::from_function(3, 2, [](auto x) { return std::max(x[0], x[1]); });
  auto half = make_rational(1, 2);
  auto bsm = FractionalPolymorphism::from_weights(2, {{mn, half}, {mx, half}});
  EXPECT_TRUE(validate_fpol(l, bsm).ok);
  EXPECT_FALSE(is_dominating(bsm, 0, 1));
  EXPECT_FALSE(validate_fpol(l, FractionalPolymorphism::from_weights(2, {{mx, 1}})).ok);
  EXPECT_FALSE(
      validate_fpol(l, FractionalPolymorphism::from_weights(2, {{mn, half}, {mx, 1}})).ok);

  auto merged = FractionalPolymorphism::from_weights(2, {{mn, half}, {mn, half}, {mx, 0}});
  ASSERT_EQ(merged.weights.size(), 1u);
  EXPECT_EQ(merged.weights[0].second, 1);
}

TEST(Fpol, EmptyLanguageDominatesViaConstant) {
  Language l = make_language(2, {}, {Valuation::from_ints({0, 1})});
  auto q = exists_dominating_fpol(l, 0, 1);
  ASSERT_TRUE(q.fpol);
  EXPECT_TRUE(is_dominating(*q.fpol, 0, 1));
  EXPECT_TRUE(verify_certificate(q.system, q.certificate).ok);
  EXPECT_EQ(q.omega.size(), 16u);
  EXPECT_THROW(construct_separating_valuation(l, q), ContractError);
  EXPECT_THROW(exists_dominating_fpol(l, 0, 0), ContractError);
}

TEST(Fpol, CrossSeparates) {
  Language l = make_language(2, {cross2()}, {Valuation::from_ints({0, 1})});
  auto q = exists_dominating_fpol(l, 0, 1);
  ASSERT_FALSE(q.certificate.primal());
  EXPECT_TRUE(verify_certificate(q.system, q.certificate).ok);
  auto sep = construct_separating_valuation(l, q);
  EXPECT_TRUE(sep.valuation(0).is_finite());
  EXPECT_GT(sep.valuation(0), sep.valuation(1));
  EXPECT_EQ(expressibility_evaluate(l, sep.instance, sep.variable), sep.valuation);
  EXPECT_EQ(sep.instance.name(sep.variable), "(a,b)");
}

TEST(Fpol, BalancedProjectionsNeverDominate) {
  for (std::size_t n = 2; n <= 3; ++n)
    for (Value a = 0; a < n; ++a)
      for (Value b = 0; b < n; ++b) {
        if (a == b) continue;
        auto w = FractionalPolymorphism::from_weights(
            2, {{Operation::projection(n, 2, 0), make_rational(1, 2)},
                {Operation::projection(n, 2, 1), make_rational(1, 2)}});
        EXPECT_FALSE(is_dominating(w, a, b));
        // A lone first projection meets both inequalities; it is an fpol
        // only when every valuation is constant on its finite part.
        auto p1 = FractionalPolymorphism::from_weights(2, {{Operation::projection(n, 2, 0), 1}});
        EXPECT_TRUE(is_dominating(p1, a, b));
      }
  Language flat = make_language(2, {}, {Valuation::from_ints({1, 1})});
  EXPECT_TRUE(validate_fpol(
      flat, FractionalPolymorphism::from_weights(2, {{Operation::projection(2, 2, 0), 1}})).ok);
}

TEST(Fpol, IndicatorSolutionsArePolymorphisms) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 15; ++trial) {
    Language l = testing::random_language(rng, 2);
    MinHomInstance ind = binary_indicator_instance(l);
    MinHomInstance crisp(ind.names());
    for (const auto& c : ind.constraints()) crisp.add_constraint(c.scope, c.relation);
    auto sols = brute_force_minhom(l, crisp, 100'000'000, 100'000).optimal_assignments;
    OperationConstraint any(3, 2);
    auto pols = enumerate_binary_polymorphisms(l.relations(), any);
    std::vector<Operation> got;
    for (const auto& s : sols) got.emplace_back(3, 2, s);
    EXPECT_EQ(got, pols);
  }
}

TEST(FpolAlternative, Examples) {
  Language free = make_language(2, {}, {Valuation::from_ints({0, 1})});
  auto r = lemma_fpol_alternative(free, 0, 1, Valuation::from_ints({0, 1}));
  ASSERT_TRUE(r.fpol);
  ASSERT_TRUE(r.f);
  EXPECT_FALSE(r.cross);
  EXPECT_TRUE(validate_fpol(free, *r.fpol).ok);
  Value u = (*r.f)(0, 1), v = (*r.f)(1, 0);
  EXPECT_FALSE((u == 0 && v == 1) || (u == 1 && v == 0));

  Language l = make_language(2, {cross2()}, {Valuation::from_ints({0, 1})});
  auto c = lemma_fpol_alternative(l, 0, 1, Valuation::from_ints({0, 1}));
  ASSERT_TRUE(c.cross);
  EXPECT_FALSE(c.fpol);
  EXPECT_TRUE(c.cross->validated);
  EXPECT_EQ(c.cross->argmin, cross2());
  EXPECT_EQ(weighted_pp_evaluate(l, c.cross->instance, {c.cross->ab, c.cross->ba}),
            c.cross->projection);
}

TEST(FpolAlternative, RandomLanguagesEitherBranchChecks) {
  std::mt19937_64 rng(77);
  int fpols = 0, crosses = 0;
  for (int trial = 0; trial < 25; ++trial) {
    Language l = testing::random_language(rng, 2);
    // Odd trials draw sigma freely, outside any closure guarantee.
    const bool expressible = trial % 2 == 0;
    Valuation sigma = expressible ? l.valuation(rng() % 2)
                                  : Valuation::from_ints({static_cast<long>(rng() % 4),
                                                          static_cast<long>(rng() % 4),
                                                          static_cast<long>(rng() % 4)});
    Value a = rng() % 3, b = (a + 1 + rng() % 2) % 3;
    auto r = lemma_fpol_alternative(l, a, b, sigma);
    EXPECT_TRUE(verify_certificate(r.system, r.certificate).ok);
    if (r.fpol) {
      ++fpols;
      EXPECT_TRUE(validate_fpol(l, *r.fpol).ok);
      ASSERT_TRUE(r.f);
      EXPECT_LE(sigma((*r.f)(a, b)) + sigma((*r.f)(b, a)), sigma(a) + sigma(b));
      continue;
    }
    ++crosses;
    ASSERT_TRUE(r.cross);
    EXPECT_EQ(weighted_pp_evaluate(l, r.cross->instance, {r.cross->ab, r.cross->ba},
                                   100'000'000),
              r.cross->projection);
    if (expressible || r.cross->scale == 0) EXPECT_TRUE(r.cross->validated) << "trial " << trial;
  }
  EXPECT_GT(fpols, 0);
  EXPECT_GT(crosses, 0);
}

TEST(SymmetricFpol, Examples) {
  Language cross = make_language(
      2, {pictogram(Pictogram::kCross, 2, 1, 0, 1, 0)}, {Valuation::from_ints({0, 1})});
  auto q = exists_symmetric_fpol(cross);
  EXPECT_FALSE(q.certificate.primal());
  EXPECT_TRUE(q.omega.empty());
  EXPECT_TRUE(verify_certificate(q.system, q.certificate).ok);

  Language free = make_language(2, {}, {Valuation::from_ints({0, 1})});
  auto f = exists_symmetric_fpol(free);
  ASSERT_TRUE(f.fpol);
  for (const auto& [g, w] : f.fpol->weights) EXPECT_TRUE(g.commutative_on(0, 1));

  Language bsm = make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2})});
  auto b = exists_symmetric_fpol(bsm);
  ASSERT_TRUE(b.fpol);
  EXPECT_TRUE(validate_fpol(bsm, *b.fpol).ok);
  EXPECT_THROW(exists_symmetric_fpol(bsm, 3), ContractError);
}

TEST(FpolProperties, DominationAndSeparationAreExclusive) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 12; ++trial) {
    Language l = testing::random_language(rng, 2);
    for (Value a = 0; a < 3; ++a)
      for (Value b = 0; b < 3; ++b) {
        if (a == b) continue;
        auto q = exists_dominating_fpol(l, a, b);
        ASSERT_TRUE(verify_certificate(q.system, q.certificate).ok);
        if (q.fpol) {
          EXPECT_TRUE(validate_fpol(l, *q.fpol).ok);
          EXPECT_TRUE(is_dominating(*q.fpol, a, b));
          continue;
        }
        auto sep = construct_separating_valuation(l, q);
        EXPECT_TRUE(sep.valuation(a).is_finite());
        EXPECT_GT(sep.valuation(a), sep.valuation(b));
      }
  }
}

TEST(FpolProperties, ValidationSurvivesRenaming) {
  std::mt19937_64 rng(3);
  const std::vector<Value> pi = {2, 0, 1};
  for (int trial = 0; trial < 10; ++trial) {
    Language l = testing::random_language(rng, 2);
    auto s = exists_symmetric_fpol(l);
    Language pl = testing::permute(l, pi);
    auto ps = exists_symmetric_fpol(pl);
    EXPECT_EQ(s.certificate.primal(), ps.certificate.primal());
    if (!s.fpol) continue;
    std::vector<std::pair<Operation, Rational>> moved;
    for (const auto& [g, w] : s.fpol->weights) {
      std::vector<Value> t(9);
      for (Value x = 0; x < 3; ++x)
        for (Value y = 0; y < 3; ++y) t[pi[x] * 3 + pi[y]] = pi[g(x, y)];
      moved.emplace_back(Operation(3, 2, t), w);
    }
    EXPECT_TRUE(validate_fpol(pl, FractionalPolymorphism::from_weights(2, moved)).ok);
  }
}

TEST(Expressed, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Language l = testing::random_language(rng);
    MinHomInstance inst = testing::random_instance(rng, l, 2 + rng() % 4, 1 + rng() % 5);
    Variable v = rng() % inst.num_variables();
    EXPECT_EQ(expressed_valuation(l, inst, v), expressibility_evaluate(l, inst, v));
    if (!brute_force_minhom(l, inst).satisfiable) {
      EXPECT_THROW(optimal_projection(l, inst, {v}), ContractError);
      continue;
    }
    Variable w = rng() % inst.num_variables();
    EXPECT_EQ(optimal_projection(l, inst, {v, w}), weighted_pp_evaluate(l, inst, {v, w}));
  }
}

}  // namespace
}  // namespace vcsp
