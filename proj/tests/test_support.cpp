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

#include "test_support.hpp"

#include <algorithm>
#include <cstring>
#include <set>

#include "vcsp/mincore.hpp"
#include "vcsp/types.hpp"

namespace vcsp::testing {

Relation rel(std::size_t n, std::initializer_list<const char*> tuples) {
  std::vector<Tuple> ts;
  std::size_t arity = 0;
  for (const char* s : tuples) {
    Tuple t;
    for (const char* p = s; *p; ++p) t.push_back(static_cast<Value>(*p - 'a'));
    arity = t.size();
    ts.push_back(std::move(t));
  }
  return Relation(n, arity == 0 ? 1 : arity, std::move(ts));
}

Language permute(const Language& lang, const std::vector<Value>& pi) {
  std::size_t n = lang.domain_size();
  std::vector<std::string> labels(n);
  for (Value v = 0; v < n; ++v) labels[pi[v]] = lang.domain().label(v);
  std::vector<NamedRelation> rels;
  for (const auto& r : lang.named_relations()) {
    std::vector<Tuple> ts;
    for (auto t : r.relation.tuples()) {
      for (auto& v : t) v = pi[v];
      ts.push_back(std::move(t));
    }
    rels.push_back({r.name, Relation(n, r.relation.arity(), std::move(ts))});
  }
  std::vector<NamedValuation> vals;
  for (const auto& v : lang.named_valuations()) {
    std::vector<ExtRational> x(n);
    for (Value d = 0; d < n; ++d) x[pi[d]] = v.valuation(d);
    vals.push_back({v.name, Valuation(std::move(x))});
  }
  return Language(Domain(std::move(labels)), std::move(rels), std::move(vals));
}

Language make_language(std::size_t n, std::vector<Relation> rels,
                       std::vector<Valuation> vals) {
  std::vector<NamedRelation> nr;
  for (std::size_t i = 0; i < rels.size(); ++i)
    nr.push_back({"R" + std::to_string(i), std::move(rels[i])});
  std::vector<NamedValuation> nv;
  for (std::size_t i = 0; i < vals.size(); ++i)
    nv.push_back({"nu" + std::to_string(i), std::move(vals[i])});
  return Language(Domain::standard(n), std::move(nr), std::move(nv));
}

Relation h5() { return rel(3, {"ac", "ca", "bb", "bc", "cb", "cc"}); }

Relation random_relation(std::mt19937_64& rng, std::size_t n, std::size_t arity,
                         double density) {
  Relation all = Relation::full(n, arity);
  std::bernoulli_distribution keep(density);
  std::vector<Tuple> ts;
  for (const auto& t : all.tuples())
    if (keep(rng)) ts.push_back(t);
  return Relation(n, arity, std::move(ts));
}

}  // namespace vcsp::testing

namespace vcsp::testing {

namespace {

struct FmRow {
  std::vector<Rational> a;
  Rational b;
  bool strict;
  std::weak_ordering operator<=>(const FmRow&) const = default;
};

void normalize(FmRow& r) {
  for (const auto& v : r.a) {
    if (sgn(v) == 0) continue;
    Rational s = abs(v);
    for (auto& w : r.a) w /= s;
    r.b /= s;
    return;
  }
}

}  // namespace

std::optional<bool> fourier_motzkin_feasible(const LinearSystem& sys, std::size_t max_rows) {
  const std::size_t n = sys.num_variables();
  std::set<FmRow> rows;
  auto add = [&](std::set<FmRow>& into, FmRow r) {
    normalize(r);
    bool zero = true;
    for (const auto& v : r.a) zero = zero && sgn(v) == 0;
    if (!zero) {
      into.insert(std::move(r));
      return true;
    }
    return r.strict ? sgn(r.b) > 0 : sgn(r.b) >= 0;
  };
  bool ok = true;
  for (const auto& r : sys.weak_rows()) ok = add(rows, {r.a, r.bound, false}) && ok;
  for (const auto& r : sys.strict_rows()) ok = add(rows, {r.a, r.bound, true}) && ok;
  for (std::size_t j = 0; j < n; ++j) {
    if (!sys.nonnegative(j)) continue;
    std::vector<Rational> a(n, Rational(0));
    a[j] = -1;
    add(rows, {a, Rational(0), false});
  }
  if (!ok) return false;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n, best = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j]) continue;
      std::size_t p = 0, m = 0;
      for (const auto& r : rows) {
        p += sgn(r.a[j]) > 0;
        m += sgn(r.a[j]) < 0;
      }
      if (k == n || p * m < best) {
        k = j;
        best = p * m;
      }
    }
    done[k] = true;
    std::vector<FmRow> pos, neg;
    std::set<FmRow> next;
    for (const auto& r : rows) {
      int s = sgn(r.a[k]);
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
      else next.insert(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rational sp = abs(p.a[k]), sq = abs(q.a[k]);
        FmRow r{std::vector<Rational>(n), p.b / sp + q.b / sq, p.strict || q.strict};
        for (std::size_t j = 0; j < n; ++j) r.a[j] = p.a[j] / sp + q.a[j] / sq;
        if (!add(next, std::move(r))) return false;
        if (next.size() > max_rows) return std::nullopt;
      }
    rows = std::move(next);
  }
  return true;
}

std::pair<LinearSystem, LinearSystem> opposite_systems(const LinearSystem& sys) {
  const std::size_t n = sys.num_variables();
  const std::size_t nw = sys.weak_rows().size(), ns = sys.strict_rows().size();
  LinearSystem base(nw + ns);
  base.set_all_nonnegative();
  auto entry = [&](std::size_t i, std::size_t j) -> const Rational& {
    return i < nw ? sys.weak_rows()[i].a[j] : sys.strict_rows()[i - nw].a[j];
  };
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> a(nw + ns);
    for (std::size_t i = 0; i < nw + ns; ++i) a[i] = entry(i, j);
    if (sys.nonnegative(j)) {
      for (auto& v : a) v = -v;
      base.add_weak(std::move(a), Rational(0));
    } else {
      base.add_equality(a, Rational(0));
    }
  }
  std::vector<Rational> bounds(nw + ns);
  for (std::size_t i = 0; i < nw; ++i) bounds[i] = sys.weak_rows()[i].bound;
  for (std::size_t i = 0; i < ns; ++i) bounds[nw + i] = sys.strict_rows()[i].bound;

  LinearSystem negative = base;
  negative.add_strict(bounds, Rational(0));
  LinearSystem zero = base;
  zero.add_equality(bounds, Rational(0));
  std::vector<Rational> z(nw + ns, Rational(0));
  for (std::size_t i = 0; i < ns; ++i) z[nw + i] = -1;
  zero.add_strict(std::move(z), Rational(0));
  return {std::move(negative), std::move(zero)};
}

LinearSystem random_system(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_rows) {
  std::size_t n = 1 + rng() % max_vars, rows = 1 + rng() % max_rows;
  LinearSystem sys(n);
  for (std::size_t j = 0; j < n; ++j) sys.set_nonnegative(j, rng() % 2);
  auto coeff = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Rational> a(n);
    for (auto& v : a) v = rng() % 3 == 0 ? Rational(0) : coeff();
    Rational b = coeff();
    if (rng() % 5 < 2) sys.add_strict(std::move(a), std::move(b));
    else sys.add_weak(std::move(a), std::move(b));
  }
  return sys;
}

}  // namespace vcsp::testing

namespace vcsp::testing {

MinHomInstance random_instance(std::mt19937_64& rng, const Language& l,
                               std::size_t nvars, std::size_t ncons) {
  MinHomInstance inst(nvars);
  for (std::size_t c = 0; c < ncons && !l.named_relations().empty(); ++c) {
    const Relation& r = l.relation(rng() % l.named_relations().size());
    std::vector<Variable> scope;
    for (std::size_t i = 0; i < r.arity(); ++i) scope.push_back(rng() % nvars);
    inst.add_constraint(scope, r);
  }
  for (Variable v = 0; v < nvars; ++v)
    for (std::size_t k = 0; k < l.named_valuations().size(); ++k)
      if (rng() % 2) inst.add_weight(v, k, make_rational(rng() % 5, 1 + rng() % 3));
  return inst;
}

Language random_language(std::mt19937_64& rng, std::size_t num_relations) {
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < num_relations; ++i)
    rels.push_back(random_relation(rng, 3, 1 + rng() % 3, 0.55));
  std::vector<ExtRational> v1, v2;
  for (int i = 0; i < 3; ++i) {
    v1.emplace_back(Rational(static_cast<long>(rng() % 6)));
    v2.push_back(rng() % 5 == 0 ? ExtRational::infinity()
                                : ExtRational(make_rational(rng() % 7, 2)));
  }
  return make_language(3, std::move(rels), {Valuation(v1), Valuation(v2)});
}

Language random_minsol_language(std::mt19937_64& rng, std::size_t num_relations) {
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < num_relations; ++i)
    rels.push_back(random_relation(rng, 3, 2 + rng() % 2, 0.4));
  std::vector<long> vals{0, 1, 2, 3, 4, 5, 6, 7};
  std::shuffle(vals.begin(), vals.end(), rng);
  std::vector<ExtRational> nu;
  for (int i = 0; i < 3; ++i) nu.emplace_back(Rational(vals[i]));
  return make_language(3, std::move(rels), {Valuation(nu)});
}

Language random_hard_min_core(std::mt19937_64& rng) {
  for (;;) {
    Language l = random_minsol_language(rng, 1 + rng() % 2);
    if (find_shrinking_map(l) || is_gmc(l)) continue;
    return l;
  }
}

}  // namespace vcsp::testing
