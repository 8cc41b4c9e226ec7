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
#include "vcsp/instance.hpp"
#include "vcsp/io.hpp"

namespace vcsp {
namespace {

using testing::h5;
using testing::rel;

TEST(ExtRational, ConventionTable) {
  const ExtRational zero(0), two(2), half(make_rational(1, 2)),
      inf = ExtRational::infinity();
  struct Row {
    ExtRational x, y, sum, product;
  };
  const Row rows[] = {
      {zero, zero, zero, zero},  {zero, two, two, zero},
      {zero, inf, inf, zero},    {two, zero, two, zero},
      {two, half, ExtRational(make_rational(5, 2)), ExtRational(1)},
      {two, inf, inf, inf},      {inf, zero, inf, zero},
      {inf, two, inf, inf},      {inf, inf, inf, inf},
  };
  for (const auto& r : rows) {
    EXPECT_EQ(r.x + r.y, r.sum) << to_string(r.x) << " + " << to_string(r.y);
    EXPECT_EQ(r.x * r.y, r.product) << to_string(r.x) << " * " << to_string(r.y);
    EXPECT_LE(r.x, inf);
  }
  EXPECT_LT(two, inf);
  EXPECT_EQ(inf, inf);
  EXPECT_FALSE(inf < inf);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+7")), "7");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_TRUE(parse_ext_rational("inf").is_infinite());
}

TEST(Relation, CanonicalOrder) {
  Relation x(3, 2, {{2, 0}, {0, 2}, {1, 1}, {0, 2}});
  Relation y(3, 2, {{1, 1}, {2, 0}, {0, 2}});
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(x.tuples().front(), (Tuple{0, 2}));
  EXPECT_THROW(Relation(3, 2, {{0, 1, 2}}), ContractError);
  EXPECT_THROW(Relation(3, 1, {{3}}), ContractError);
}

TEST(Relation, InsertionOrderIndependence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Relation r = testing::random_relation(rng, 3, 3, 0.4);
    auto ts = r.tuples();
    std::shuffle(ts.begin(), ts.end(), rng);
    EXPECT_EQ(Relation(3, 3, ts), r);
  }
}

TEST(Pictogram, WorkedDecodings) {
  EXPECT_EQ(pictogram(Pictogram::kMis, 3, 0, 1, 1, 2), rel(3, {"ab", "ac", "bb"}));
  EXPECT_EQ(pictogram(Pictogram::kCross, 3, 0, 1, 0, 1), rel(3, {"ab", "ba"}));
  EXPECT_EQ(pictogram(Pictogram::kAll, 3, 1, 0, 1, 0),
            rel(3, {"aa", "ab", "ba", "bb"}));
  EXPECT_EQ(pictogram(Pictogram::kFlipMis, 3, 0, 1, 1, 2), rel(3, {"ab", "bb", "bc"}));
  EXPECT_EQ(pictogram(Pictogram::kCross, 2, 1, 0, 1, 0),
            pictogram(Pictogram::kCross, 2, 0, 1, 0, 1));
}

TEST(Pictogram, Counts) {
  for (Value u = 0; u < 4; ++u)
    for (Value v = 0; v < 4; ++v)
      for (Value x = 0; x < 4; ++x)
        for (Value y = 0; y < 4; ++y) {
          if (u == v || x == y) continue;
          EXPECT_EQ(pictogram(Pictogram::kMis, 4, u, v, x, y).size(), 3u);
          EXPECT_EQ(pictogram(Pictogram::kFlipMis, 4, u, v, x, y).size(), 3u);
          EXPECT_EQ(pictogram(Pictogram::kCross, 4, u, v, x, y).size(), 2u);
          EXPECT_EQ(pictogram(Pictogram::kAll, 4, u, v, x, y).size(), 4u);
        }
}

TEST(Compose, Examples) {
  Relation cross = pictogram(Pictogram::kCross, 3, 0, 1, 0, 1);
  EXPECT_EQ(compose(cross, cross), rel(3, {"aa", "bb"}));
  EXPECT_EQ(compose(compose(cross, cross), cross), cross);
  Relation empty(3, 2, {});
  EXPECT_TRUE(compose(cross, empty).empty());
  EXPECT_THROW(compose(Relation::unary(3, 1), cross), ContractError);
}

TEST(Compose, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Relation r1 = testing::random_relation(rng, 3, 2, 0.4);
    Relation r2 = testing::random_relation(rng, 3, 2, 0.4);
    Relation c = compose(r1, r2);
    for (Value x = 0; x < 3; ++x)
      for (Value z = 0; z < 3; ++z) {
        bool want = false;
        for (Value y = 0; y < 3; ++y)
          want = want || (r1.contains({x, y}) && r2.contains({y, z}));
        EXPECT_EQ(c.contains({x, z}), want);
      }
  }
}

TEST(RestrictLanguage, Examples) {
  Language l = testing::make_language(3, {h5()}, {Valuation::from_ints({0, 1, 2})});
  Language same = restrict_language(l, full_set(3));
  EXPECT_EQ(same.relation(0), l.relation(0));
  EXPECT_EQ(same.domain(), l.domain());

  Language bc = restrict_language(l, bit(1) | bit(2));
  EXPECT_EQ(bc.domain().labels(), (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(bc.relation(0), Relation::full(2, 2));
  EXPECT_EQ(bc.valuation(0), Valuation::from_ints({1, 2}));

  Language g1 = testing::make_language(3, {rel(3, {"ca", "ac"})}, {});
  EXPECT_TRUE(restrict_language(g1, bit(0) | bit(1)).relation(0).empty());
  EXPECT_THROW(restrict_language(l, 0), ContractError);
}

TEST(Measure, Examples) {
  Language l(Domain::standard(3), {},
             {{"zero", Valuation::from_ints({0, 0, 0})},
              {"inf", Valuation({ExtRational::infinity(), 0, 0})},
              {"lin", Valuation::from_ints({0, 1, 2})}});
  MinHomInstance one(1);
  one.add_weight(0, 0, 1);
  EXPECT_EQ(measure(l, one, {0}), ExtRational(0));

  MinHomInstance zero_inf(1);
  zero_inf.add_weight(0, 1, 0);
  EXPECT_EQ(measure(l, zero_inf, {0}), ExtRational(0));

  MinHomInstance two(2);
  two.add_weight(0, 2, 1);
  two.add_weight(1, 2, 1);
  EXPECT_EQ(measure(l, two, {1, 2}), ExtRational(3));

  MinHomInstance bad(1);
  bad.add_weight(0, 7, 1);
  EXPECT_THROW(measure(l, bad, {0}), ContractError);
}

TEST(Measure, MonotoneInWeights) {
  std::mt19937_64 rng(3);
  Language l(Domain::standard(3), {},
             {{"a", Valuation::from_ints({0, 4, 1})},
              {"b", Valuation({ExtRational::infinity(), 2, make_rational(1, 3)})}});
  for (int trial = 0; trial < 100; ++trial) {
    MinHomInstance inst(3);
    for (Variable v = 0; v < 3; ++v)
      for (std::size_t k = 0; k < 2; ++k) inst.add_weight(v, k, rng() % 4);
    Assignment phi{static_cast<Value>(rng() % 3), static_cast<Value>(rng() % 3),
                   static_cast<Value>(rng() % 3)};
    ExtRational before = measure(l, inst, phi);
    Variable v = rng() % 3;
    std::size_t k = rng() % 2;
    if (l.valuation(k)(phi[v]).is_infinite()) continue;
    MinHomInstance more = inst;
    more.add_weight(v, k, make_rational(1 + rng() % 5, 2));
    EXPECT_GE(measure(l, more, phi), before);
  }
}

TEST(Io, RoundTrip) {
  const char* text = R"({
    "domain": ["a", "b", "c"],
    "relations": {"H5": [["a","c"],["c","a"],["b","b"],["b","c"],["c","b"],["c","c"]],
                  "E": {"arity": 2, "tuples": []},
                  "U": ["a", "b"]},
    "valuations": {"nu": {"a": 0, "b": "3/2", "c": "inf"}},
    "instances": {"I": {"variables": ["u", "v"],
                        "constraints": [["H5", ["u", "v"]]],
                        "weights": [["u", "nu", 1], ["v", "nu", "1/3"]]}}
  })";
  Document doc = parse_document_text(text);
  EXPECT_EQ(doc.language.relation(0), h5());
  EXPECT_TRUE(doc.language.relation(1).empty());
  EXPECT_EQ(doc.language.relation(2), Relation::unary(3, 3));
  EXPECT_EQ(doc.language.valuation(0)(1), ExtRational(make_rational(3, 2)));
  EXPECT_TRUE(doc.language.valuation(0)(2).is_infinite());
  ASSERT_EQ(doc.instances.size(), 1u);
  Json once = to_json(doc);
  Document again = parse_document(once);
  EXPECT_EQ(to_json(again).dump(), once.dump());
}

TEST(Io, Errors) {
  EXPECT_THROW(parse_document_text("{"), ParseError);
  EXPECT_THROW(parse_document_text(R"({"domain": ["a","a"]})"), ParseError);
  EXPECT_THROW(parse_document_text(R"({"domain": ["a"], "relations": {"R": [["b"]]}})"),
               ParseError);
  EXPECT_THROW(parse_document_text(
                   R"({"domain": ["a"], "valuations": {"nu": {"a": "x"}}})"),
               ParseError);
  EXPECT_THROW(parse_document_text(R"({"domain": ["a"], "relations": {"R": []}})"),
               ParseError);
  try {
    parse_document_text(R"({"domain": ["a","b"], "relations": {"R": [["a","b"],["a"]]}})");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/relations/R/1"), std::string::npos);
  }
}

}  // namespace
}  // namespace vcsp
