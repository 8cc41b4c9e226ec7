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
#include "vcsp/extract.hpp"
#include "vcsp/types.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::make_language;
using testing::rel;

TEST(GammaRelations, FollowTheOrder) {
  auto g = gamma_relations(Valuation::from_ints({0, 3, 4}));
  EXPECT_EQ(g[0], rel(3, {"ac", "ca"}));
  EXPECT_EQ(g[6], rel(3, {"ac", "bb", "ca"}));
  // Under c < a < b the roles move with the order.
  auto p = gamma_relations(Valuation::from_ints({1, 2, 0}));
  EXPECT_EQ(p[1], rel(3, {"ac", "ca"}));
  EXPECT_EQ(p[0], rel(3, {"bc", "cb"}));
}

TEST(ExtractGamma, H5GivesGammaOne) {
  Language l = make_language(3, {h5()}, {Valuation::from_ints({0, 3, 4})});
  auto g = extract_gamma(l, h5());
  EXPECT_EQ(g.index, 1);
  ASSERT_FALSE(g.trace.empty());
  EXPECT_EQ(g.trace[0], "w1=a w2=a q1=c q2=c alpha=1");
  EXPECT_EQ(weighted_pp_evaluate(l, g.gadget.instance, g.gadget.output), rel(3, {"ac", "ca"}));
  EXPECT_THROW(extract_gamma(l, rel(3, {"ab"})), ContractError);
}

TEST(ExtractGamma, GammaTwoIsItsOwnWitness) {
  Relation g2 = rel(3, {"ab", "ba"});
  Language l = make_language(3, {g2}, {Valuation::from_ints({0, 1, 2})});
  auto g = extract_gamma(l, g2);
  EXPECT_EQ(g.index, 2);
  EXPECT_EQ(weighted_pp_evaluate(l, g.gadget.instance, g.gadget.output), g2);
}

TEST(ExtractGamma, TernaryRecursesToBinary) {
  Relation r = rel(3, {"aba", "baa"});
  Language l = make_language(3, {r}, {Valuation::from_ints({0, 1, 2})});
  auto g = extract_gamma(l, r);
  EXPECT_EQ(g.index, 2);
  EXPECT_GE(g.trace.size(), 2u);
  EXPECT_EQ(weighted_pp_evaluate(l, g.gadget.instance, g.gadget.output), rel(3, {"ab", "ba"}));
}

TEST(ExtractGamma, FallsBackPastTheProofAlpha) {
  // alpha from the proof leaves {(b,b)} when 2 nu(b) < nu(a) + nu(c).
  Relation r = rel(3, {"ac", "bb", "ca"});
  Language l = make_language(3, {r}, {Valuation::from_ints({0, 1, 4})});
  auto g = extract_gamma(l, r);
  EXPECT_EQ(weighted_pp_evaluate(l, g.gadget.instance, g.gadget.output),
            gamma_relations(l.valuation(0))[g.index - 1]);
  EXPECT_GE(g.trace.size(), 3u);
}

TEST(ExtractConstants, H5) {
  Language l = make_language(3, {h5()}, {Valuation::from_ints({0, 3, 4})});
  auto c = extract_constants(l);
  ASSERT_EQ(c.constants.size(), 3u);
  for (Value v = 0; v < 3; ++v)
    EXPECT_EQ(weighted_pp_evaluate(l, c.constants[v].instance, c.constants[v].output),
              Relation::unary(3, bit(v)));
  EXPECT_EQ(c.gamma.index, 1);
  // a alone, c from gamma_1, b through the substituted relation.
  EXPECT_EQ(c.constants[0].instance.num_variables(), 1u);
  EXPECT_EQ(c.constants[2].instance.num_variables(), 2u);
  EXPECT_GT(c.constants[1].instance.num_variables(), 2u);
}

TEST(ExtractConstants, BsmSideStillHasConstants) {
  // Easy, yet a min-core that is not GMC.
  Language l = make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2})});
  auto c = extract_constants(l);
  for (Value v = 0; v < 3; ++v)
    EXPECT_EQ(weighted_pp_evaluate(l, c.constants[v].instance, c.constants[v].output),
              Relation::unary(3, bit(v)));
}

TEST(ExtractConstants, RejectsEasyLanguages) {
  EXPECT_THROW(extract_constants(make_language(3, {}, {Valuation::from_ints({0, 1, 2})})),
               ContractError);
  EXPECT_THROW(extract_constants(make_language(3, {h5()}, {Valuation::from_ints({0, 3, 3})})),
               ContractError);
}

TEST(ExtractConstants, RandomHardMinCores) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    Language l = testing::random_hard_min_core(rng);
    auto c = extract_constants(l);
    const auto& g = c.gamma.gadget;
    EXPECT_EQ(weighted_pp_evaluate(l, g.instance, g.output),
              gamma_relations(l.valuation(0))[c.gamma.index - 1]);
    for (Value v = 0; v < 3; ++v)
      EXPECT_EQ(weighted_pp_evaluate(l, c.constants[v].instance, c.constants[v].output),
                Relation::unary(3, bit(v)));
  }
}

}  // namespace
}  // namespace vcsp
