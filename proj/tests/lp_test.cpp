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
#include "vcsp/lp.hpp"

namespace vcsp {
namespace {

using Kind = MotzkinCertificate::Kind;
using Case = MotzkinCertificate::DualCase;

std::vector<Rational> q(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

TEST(SolveAlternative, Examples) {
  LinearSystem a(1);
  a.add_weak(q({1}), 1);
  a.add_weak(q({-1}), 0);
  auto ca = solve_alternative(a);
  ASSERT_EQ(ca.kind, Kind::kPrimal);
  EXPECT_TRUE(ca.x[0] >= 0 && ca.x[0] <= 1);

  LinearSystem b(1);
  b.add_weak(q({1}), -1);
  b.add_weak(q({-1}), 0);
  auto cb = solve_alternative(b);
  ASSERT_EQ(cb.kind, Kind::kDual);
  EXPECT_EQ(cb.dual_case, Case::kNegativeCombination);
  EXPECT_EQ(cb.y[0], cb.y[1]);
  EXPECT_GT(cb.y[0], 0);

  LinearSystem c(1);
  c.add_weak(q({-1}), 0);
  c.add_strict(q({1}), 0);
  auto cc = solve_alternative(c);
  ASSERT_EQ(cc.kind, Kind::kDual);
  EXPECT_EQ(cc.dual_case, Case::kZeroWithZNonzero);
  EXPECT_GT(cc.z[0], 0);
  EXPECT_EQ(cc.y[0], cc.z[0]);
}

TEST(SolveAlternative, NonnegativityFlags) {
  LinearSystem s(2);
  s.set_all_nonnegative();
  s.add_weak(q({1, 1}), -1);
  auto c = solve_alternative(s);
  ASSERT_EQ(c.kind, Kind::kDual);
  EXPECT_TRUE(verify_certificate(s, c).ok);

  LinearSystem f(2);
  f.add_weak(q({1, 1}), -1);
  EXPECT_EQ(solve_alternative(f).kind, Kind::kPrimal);

  LinearSystem empty(3);
  EXPECT_EQ(solve_alternative(empty).kind, Kind::kPrimal);
  LinearSystem none(0);
  none.add_strict({}, 0);
  EXPECT_EQ(solve_alternative(none).dual_case, Case::kZeroWithZNonzero);
}

TEST(SolveAlternative, VerifierRejectsTampering) {
  LinearSystem b(1);
  b.add_weak(q({1}), -1);
  b.add_weak(q({-1}), 0);
  auto cert = solve_alternative(b);
  ASSERT_TRUE(verify_certificate(b, cert).ok);
  auto bad = cert;
  bad.y[0] += 1;
  EXPECT_FALSE(verify_certificate(b, bad).ok);
  bad = cert;
  bad.dual_case = Case::kZeroWithZNonzero;
  EXPECT_FALSE(verify_certificate(b, bad).ok);
  bad = cert;
  bad.kind = Kind::kPrimal;
  bad.x = q({0});
  EXPECT_FALSE(verify_certificate(b, bad).ok);
  bad = cert;
  bad.y[1] = -1;
  EXPECT_FALSE(verify_certificate(b, bad).ok);
}

TEST(SolveAlternative, RandomSystemsAgreeWithEliminationAndOppositeSide) {
  std::mt19937_64 rng(101);
  int primal = 0, dual = 0, skipped = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearSystem sys = testing::random_system(rng, 6, 10);
    auto cert = solve_alternative(sys);
    ASSERT_TRUE(verify_certificate(sys, cert).ok);
    auto fm = testing::fourier_motzkin_feasible(sys);
    if (fm) EXPECT_EQ(*fm, cert.primal()) << "trial " << trial;
    else ++skipped;
    auto [neg, zero] = testing::opposite_systems(sys);
    bool opposite = solve_alternative(neg).primal() || solve_alternative(zero).primal();
    EXPECT_NE(opposite, cert.primal()) << "trial " << trial;
    (cert.primal() ? primal : dual)++;
  }
  EXPECT_GT(primal, 30);
  EXPECT_GT(dual, 30);
  EXPECT_LT(skipped, 10);
}

TEST(SolveAlternative, WideSystem) {
  // Few rows and many columns, the shape of the fractional polymorphism LPs.
  std::mt19937_64 rng(5);
  const std::size_t n = 3000;
  LinearSystem s(n);
  s.set_all_nonnegative();
  for (int i = 0; i < 10; ++i) {
    std::vector<Rational> a(n);
    for (auto& v : a) v = static_cast<long>(rng() % 5);
    s.add_weak(std::move(a), 2);
  }
  std::vector<Rational> ones(n, Rational(1));
  s.add_equality(ones, 1);
  auto c = solve_alternative(s);
  EXPECT_TRUE(verify_certificate(s, c).ok);
}

}  // namespace
}  // namespace vcsp
