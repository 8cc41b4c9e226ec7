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

#include <algorithm>
#include <numeric>
#include <random>

#include "test_support.hpp"
#include "vcsp/brute_force.hpp"
#include "vcsp/csp.hpp"
#include "vcsp/errors.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::rel;

Language lang3(std::vector<Relation> rels, std::vector<Valuation> vals = {}) {
  return testing::make_language(3, std::move(rels), std::move(vals));
}

TEST(CspSolve, Examples) {
  Relation ab = Relation::unary(3, bit(0) | bit(1));
  Relation cross = pictogram(Pictogram::kCross, 3, 0, 1, 0, 1);
  Language l = lang3({ab, cross, Relation::unary(3, bit(0)), Relation::unary(3, bit(1))});

  MinHomInstance one(1);
  one.add_constraint({0}, ab);
  auto r1 = csp_solve(l, one, CspMode::kPerVariableValues);
  EXPECT_TRUE(r1.satisfiable);
  EXPECT_EQ(r1.values[0], bit(0) | bit(1));

  MinHomInstance two(2);
  two.add_constraint({0, 1}, cross);
  auto r2 = csp_solve(l, two, CspMode::kPerVariableValues);
  EXPECT_EQ(r2.values[0], bit(0) | bit(1));
  EXPECT_EQ(r2.values[1], bit(0) | bit(1));
  auto all = csp_solve(l, two, CspMode::kAllSolutions);
  EXPECT_EQ(all.solutions, (std::vector<Assignment>{{0, 1}, {1, 0}}));

  MinHomInstance clash(1);
  clash.add_constraint({0}, l.relation(2));
  clash.add_constraint({0}, l.relation(3));
  EXPECT_FALSE(csp_solve(l, clash, CspMode::kAnySolution).satisfiable);
  EXPECT_FALSE(csp_solve(l, clash, CspMode::kPerVariableValues).satisfiable);
}

TEST(CspSolve, RepeatedScopeVariables) {
  Relation neq = rel(3, {"ab", "ba", "ac", "ca", "bc", "cb"});
  MinHomInstance inst(1);
  inst.add_constraint({0, 0}, neq);
  EXPECT_FALSE(csp_solve(lang3({neq}), inst, CspMode::kAnySolution).satisfiable);
  MinHomInstance loop(1);
  loop.add_constraint({0, 0}, h5());
  auto r = csp_solve(lang3({h5()}), loop, CspMode::kPerVariableValues);
  EXPECT_EQ(r.values[0], bit(1) | bit(2));
}

TEST(BruteForce, Examples) {
  Language l = lang3({Relation::unary(3, bit(0) | bit(1)), h5()},
                     {Valuation::from_ints({0, 1, 5}), Valuation::from_ints({0, 3, 4})});
  MinHomInstance single(1);
  single.add_constraint({0}, l.relation(0));
  single.add_weight(0, 0, 1);
  auto r = brute_force_minhom(l, single);
  ASSERT_TRUE(r.satisfiable);
  EXPECT_EQ(r.optimum, ExtRational(0));
  EXPECT_EQ(r.optimal_assignments, (std::vector<Assignment>{{0}}));

  MinHomInstance edge(2);
  edge.add_constraint({0, 1}, h5());
  edge.add_weight(0, 1, 1);
  edge.add_weight(1, 1, 1);
  auto e = brute_force_minhom(l, edge);
  EXPECT_EQ(e.optimum, ExtRational(4));
  EXPECT_EQ(e.optimal_assignments, (std::vector<Assignment>{{0, 2}, {2, 0}}));

  Language linf(Domain::standard(2), {{"R", Relation::unary(2, bit(1))}},
                {{"nu", Valuation({0, ExtRational::infinity()})}});
  MinHomInstance forced(1);
  forced.add_constraint({0}, linf.relation(0));
  forced.add_weight(0, 0, 2);
  EXPECT_TRUE(brute_force_minhom(linf, forced).optimum.is_infinite());

  MinHomInstance big(20);
  EXPECT_THROW(brute_force_minhom(l, big), ResourceError);
}

TEST(BruteForce, AllOptimalAndTruncation) {
  Language l = lang3({}, {Valuation::from_ints({0, 0, 1})});
  MinHomInstance inst(3);
  for (Variable v = 0; v < 3; ++v) inst.add_weight(v, 0, 1);
  auto r = brute_force_minhom(l, inst);
  EXPECT_EQ(r.optimal_assignments.size(), 8u);
  auto capped = brute_force_minhom(l, inst, kDefaultBruteForceBudget, 3);
  EXPECT_EQ(capped.optimal_assignments.size(), 3u);
  EXPECT_TRUE(capped.truncated);
}

TEST(WeightedPp, Examples) {
  Language l = lang3({h5()}, {Valuation::from_ints({0, 1, 2})});
  MinHomInstance single(1);
  single.add_weight(0, 0, 1);
  EXPECT_EQ(weighted_pp_evaluate(l, single, {0}), Relation::unary(3, bit(0)));

  MinHomInstance free(2);
  free.add_constraint({0, 1}, h5());
  EXPECT_EQ(weighted_pp_evaluate(l, free, {0, 1}), h5());

  // gamma_1 = {(c,a),(a,c)} projected to its first coordinate under nu(x).
  Relation g1 = rel(3, {"ca", "ac"});
  Language lg = lang3({g1}, {Valuation::from_ints({0, 1, 2})});
  MinHomInstance gadget(2);
  gadget.add_constraint({0, 1}, g1);
  gadget.add_weight(0, 0, 1);
  EXPECT_EQ(weighted_pp_evaluate(lg, gadget, {0}), Relation::unary(3, bit(0)));
  EXPECT_EQ(weighted_pp_evaluate(lg, gadget, {1}), Relation::unary(3, bit(2)));

  MinHomInstance unsat(1);
  unsat.add_constraint({0}, Relation(3, 1, {}));
  EXPECT_THROW(weighted_pp_evaluate(l, unsat, {0}), ContractError);
}

TEST(Expressibility, Examples) {
  Language l = lang3({Relation::unary(3, bit(0) | bit(2)), Relation(3, 1, {})},
                     {Valuation::from_ints({2, 0, 1})});
  MinHomInstance id(1);
  id.add_weight(0, 0, 1);
  EXPECT_EQ(expressibility_evaluate(l, id, 0), Valuation::from_ints({2, 0, 1}));

  MinHomInstance restricted(1);
  restricted.add_constraint({0}, l.relation(0));
  restricted.add_weight(0, 0, 1);
  EXPECT_EQ(expressibility_evaluate(l, restricted, 0),
            Valuation({2, ExtRational::infinity(), 1}));

  MinHomInstance empty(1);
  empty.add_constraint({0}, l.relation(1));
  auto inf = ExtRational::infinity();
  EXPECT_EQ(expressibility_evaluate(l, empty, 0), Valuation({inf, inf, inf}));
}

TEST(SolverProperties, PerVariableValuesMatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    Language l = testing::random_language(rng);
    MinHomInstance inst = testing::random_instance(rng, l, 2 + rng() % 5, 1 + rng() % 6);
    auto csp = csp_solve(l, inst, CspMode::kPerVariableValues);
    MinHomInstance crisp = inst;
    std::vector<ValueSet> want(inst.num_variables(), 0);
    // Zero weights: every solution is optimal.
    MinHomInstance unweighted(inst.num_variables());
    for (const auto& c : inst.constraints()) unweighted.add_constraint(c.scope, c.relation);
    auto bf = brute_force_minhom(l, unweighted);
    for (const auto& phi : bf.optimal_assignments)
      for (Variable v = 0; v < phi.size(); ++v) want[v] |= bit(phi[v]);
    EXPECT_EQ(csp.satisfiable, bf.satisfiable);
    if (bf.satisfiable) EXPECT_EQ(csp.values, want);
  }
}

TEST(SolverProperties, BranchAndBoundMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Language l = testing::random_language(rng);
    MinHomInstance inst = testing::random_instance(rng, l, 2 + rng() % 6, 1 + rng() % 7);
    auto bf = brute_force_minhom(l, inst);
    CspModel m = model_from_instance(inst, 3);
    auto opt = optimize(m, unary_costs(l, inst), 1'000'000);
    ASSERT_EQ(opt.satisfiable, bf.satisfiable);
    if (!bf.satisfiable) continue;
    EXPECT_EQ(opt.optimum, bf.optimum);
    EXPECT_EQ(opt.optimal, bf.optimal_assignments);
  }
}

TEST(SolverProperties, InvariantUnderReorderingAndRenaming) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    Language l = testing::random_language(rng);
    std::size_t n = 2 + rng() % 5;
    MinHomInstance inst = testing::random_instance(rng, l, n, 1 + rng() % 6);
    auto base = brute_force_minhom(l, inst);

    std::vector<Variable> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    auto cons = inst.constraints();
    std::shuffle(cons.begin(), cons.end(), rng);
    MinHomInstance moved(n);
    for (const auto& c : cons) {
      std::vector<Variable> s;
      for (Variable v : c.scope) s.push_back(pi[v]);
      moved.add_constraint(s, c.relation);
    }
    for (const auto& w : inst.weights()) moved.add_weight(pi[w.variable], w.valuation, w.value);
    auto other = brute_force_minhom(l, moved);
    ASSERT_EQ(base.satisfiable, other.satisfiable);
    if (base.satisfiable) {
      EXPECT_EQ(base.optimum, other.optimum);
      EXPECT_EQ(base.optimal_assignments.size(), other.optimal_assignments.size());
    }
  }
}

TEST(SolverProperties, WeightedPpIsSubsetOfProjection) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    Language l = testing::random_language(rng);
    MinHomInstance inst = testing::random_instance(rng, l, 2 + rng() % 4, 1 + rng() % 4);
    if (!brute_force_minhom(l, inst).satisfiable) continue;
    std::vector<Variable> proj{0, 1};
    Relation w = weighted_pp_evaluate(l, inst, proj);
    Relation p = pp_evaluate(l, inst, proj);
    for (const auto& t : w.tuples()) EXPECT_TRUE(p.contains(t));
  }
}

}  // namespace
}  // namespace vcsp
