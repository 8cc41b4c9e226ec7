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

#include "vcsp/types.hpp"

#include <algorithm>
#include <map>

#include "vcsp/errors.hpp"
#include "vcsp/ppdef.hpp"

namespace vcsp {

std::vector<Pair> all_pairs(std::size_t n) {
  std::vector<Pair> out;
  for (Value a = 0; a < n; ++a)
    for (Value b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

const Elimination* GwtpWitness::elimination_for(ValueSet u) const {
  for (const auto& s : subsets)
    if (s.subset == u) return s.elimination ? &eliminations.at(*s.elimination) : nullptr;
  return nullptr;
}

std::string type_name(const TypeWitness& w) {
  if (std::holds_alternative<GmcWitness>(w)) return "GMC";
  if (std::holds_alternative<BsmWitness>(w)) return "BSM";
  return "GWTP";
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
  for (const auto& v : other.violations) violations.push_back(prefix + v);
}

namespace {

std::string pair_str(Pair p) {
  return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

bool gmc_cell_ok(const Valuation& nu, Value a, Value b, Value u, Value v) {
  const auto& hi = std::max(nu(a), nu(b));
  const auto& lo = std::min(nu(a), nu(b));
  return !(nu(u) >= hi) || nu(v) < lo;
}

bool contains_pair(const std::vector<Pair>& ps, Pair p) {
  return std::find(ps.begin(), ps.end(), p) != ps.end();
}

bool is_sorted_pair_set(const std::vector<Pair>& ps, std::size_t n) {
  for (auto [a, b] : ps)
    if (!(a < b && b < n)) return false;
  return std::is_sorted(ps.begin(), ps.end()) &&
         std::adjacent_find(ps.begin(), ps.end()) == ps.end();
}

bool bsm_valuation_ok(const Language& lang, Value a, Value b, Value c) {
  for (const auto& nv : lang.named_valuations()) {
    const Valuation& nu = nv.valuation;
    if (!(nu(b) + nu(b) <= nu(a) + nu(c))) return false;
  }
  return true;
}

void check_binary(ValidationReport& r, const Operation& f, std::size_t n,
                  const std::string& name) {
  if (f.arity() != 2 || f.domain_size() != n) r.fail(name + " is not a binary operation on D");
}

ValidationReport validate_gmc(const Language& lang, const GmcWitness& w) {
  ValidationReport r;
  const std::size_t n = lang.domain_size();
  check_binary(r, w.f, n, "f");
  if (!r.ok()) return r;
  if (!is_polymorphism(w.f, lang.relations())) r.fail("f is not a polymorphism");
  for (const auto& nv : lang.named_valuations()) {
    const Valuation& nu = nv.valuation;
    for (Value a = 0; a < n; ++a) {
      if (!(nu(w.f(a, a)) <= nu(a)))
        r.fail("nu(f(x,x)) > nu(x) at x=" + std::to_string(a) + " for " + nv.name);
      for (Value b = 0; b < n; ++b)
        if (a != b && !gmc_cell_ok(nu, a, b, w.f(a, b), w.f(b, a)))
          r.fail("f(" + std::to_string(a) + "," + std::to_string(b) +
                 ") is nu-maximal while f of the swapped pair is not below both, for " +
                 nv.name);
    }
  }
  return r;
}

ValidationReport validate_bsm(const Language& lang, const BsmWitness& w) {
  ValidationReport r;
  const std::size_t n = lang.domain_size();
  if (n != 3) r.fail("BSM needs a three-element domain");
  Value a = w.a, b = w.b, c = w.c;
  if (a >= n || b >= n || c >= n || a == b || b == c || a == c) r.fail("roles are not three distinct elements");
  check_binary(r, w.meet, n, "meet");
  check_binary(r, w.join, n, "join");
  if (!r.ok()) return r;
  if (!bsm_valuation_ok(lang, a, b, c)) r.fail("2 nu(b) > nu(a) + nu(c) for some valuation");
  auto down = [&](const Operation& f, Value x, Value y) { return f(x, y) == y && f(y, x) == y; };
  if (!down(w.meet, a, b) || !down(w.meet, c, b)) r.fail("meet is not in down(a,b) down(c,b)");
  if (!down(w.join, b, a) || !down(w.join, b, c)) r.fail("join is not in up(a,b) up(c,b)");
  if (w.meet(a, c) != b || w.join(a, c) != b) r.fail("a meet c or a join c differs from b");
  for (const Operation* f : {&w.meet, &w.join}) {
    const char* name = f == &w.meet ? "meet" : "join";
    if (!f->is_idempotent()) r.fail(std::string(name) + " is not idempotent");
    for (Pair p : all_pairs(n))
      if (!f->commutative_on(p.first, p.second))
        r.fail(std::string(name) + " is not commutative on " + pair_str(p));
  }
  auto g = lang.relations();
  if (!is_polymorphism(w.meet, g)) r.fail("meet is not a polymorphism");
  if (!is_polymorphism(w.join, g)) r.fail("join is not a polymorphism");
  return r;
}

ValidationReport validate_gwtp(const Language& lang, const GwtpWitness& w,
                               const FindOptions& opts) {
  ValidationReport r;
  const std::size_t n = lang.domain_size();
  const auto gamma = lang.relations();
  if (!is_sorted_pair_set(w.A, n) || !is_sorted_pair_set(w.B, n))
    r.fail("A or B is not a sorted set of pairs");
  for (Pair p : w.A)
    if (!contains_pair(w.B, p)) r.fail("A is not contained in B: " + pair_str(p));
  check_binary(r, w.f1, n, "f1");
  check_binary(r, w.f2, n, "f2");
  if (w.m.arity() != 3 || w.m.domain_size() != n) r.fail("m is not a ternary operation on D");
  if (!r.ok()) return r;

  if (!is_polymorphism(w.f1, gamma)) r.fail("f1 is not a polymorphism");
  if (!is_polymorphism(w.f2, gamma)) r.fail("f2 is not a polymorphism");
  if (!is_polymorphism(w.m, gamma)) r.fail("m is not a polymorphism");
  for (Pair p : all_pairs(n)) {
    auto [x, y] = p;
    if (!contains_pair(w.B, p)) {
      if (!w.f1.projection_on(x, y)) r.fail("f1 is not a projection on " + pair_str(p));
      if (!w.f2.projection_on(x, y)) r.fail("f2 is not a projection on " + pair_str(p));
      if (!w.m.arithmetical_on(x, y)) r.fail("m is not arithmetical on " + pair_str(p));
    } else if (!contains_pair(w.A, p)) {
      for (const Operation* f : {&w.f1, &w.f2}) {
        const char* name = f == &w.f1 ? "f1" : "f2";
        if (!f->idempotent_on(x, y) || !f->conservative_on(x, y) || !f->commutative_on(x, y))
          r.fail(std::string(name) + " is not idempotent, conservative and commutative on " +
                 pair_str(p));
      }
      if (w.f1(x, y) == w.f2(x, y)) r.fail("f1 and f2 agree on " + pair_str(p));
    }
  }
  for (Value x = 0; x < n; ++x) {
    if (w.m(x, x, x) != x) r.fail("m is not idempotent");
    for (Value y = 0; y < n; ++y)
      for (Value z = 0; z < n; ++z)
        if (x != y && y != z && x != z) {
          Value v = w.m(x, y, z);
          if (v != x && v != y && v != z) r.fail("m leaves its arguments on a distinct triple");
        }
  }

  for (std::size_t i = 0; i < w.eliminations.size(); ++i) {
    const auto& e = w.eliminations[i];
    std::string at = "elimination " + std::to_string(i) + ": ";
    Pair p{std::min(e.a, e.b), std::max(e.a, e.b)};
    if (e.a == e.b || e.b >= n || !contains_pair(w.A, p)) {
      r.fail(at + "pair is not in A");
      continue;
    }
    auto check = validate_fpol(lang, e.fpol);
    if (!check.ok) r.fail(at + check.reason);
    if (!is_dominating(e.fpol, e.a, e.b)) r.fail(at + "fpol is not dominating");
  }

  std::vector<ValueSet> defs = definable_subsets(gamma, n, opts);
  std::vector<ValueSet> listed;
  for (const auto& s : w.subsets) listed.push_back(s.subset);
  if (listed != defs) r.fail("subset list differs from the pp-definable subsets");
  for (const auto& s : w.subsets) {
    bool has_a_pair = false;
    for (auto [x, y] : w.A) has_a_pair = has_a_pair || (has(s.subset, x) && has(s.subset, y));
    std::string at = "subset " + std::to_string(s.subset) + ": ";
    if (!has_a_pair) {
      if (s.elimination) r.fail(at + "elimination given without a pair of A");
      continue;
    }
    if (!s.elimination || *s.elimination >= w.eliminations.size()) {
      r.fail(at + "no elimination pair");
      continue;
    }
    const auto& e = w.eliminations[*s.elimination];
    if (!has(s.subset, e.a) || !has(s.subset, e.b)) r.fail(at + "elimination pair not inside");
    ValueSet rest = s.subset & ~bit(e.b);
    if (std::find(defs.begin(), defs.end(), rest) == defs.end())
      r.fail(at + "subset without b is not pp-definable");
  }
  return r;
}

}  // namespace

ValidationReport validate_witness(const Language& lang, const TypeWitness& w,
                                  const FindOptions& opts) {
  if (auto* g = std::get_if<GmcWitness>(&w)) return validate_gmc(lang, *g);
  if (auto* b = std::get_if<BsmWitness>(&w)) return validate_bsm(lang, *b);
  return validate_gwtp(lang, std::get<GwtpWitness>(w), opts);
}

bool check_generalised_min_closed(const Relation& r, const Valuation& nu) {
  if (!nu.is_injective()) throw ContractError("generalised min-closure needs an injective valuation");
  if (r.empty()) return true;
  Tuple mins = r.tuples().front();
  for (const Tuple& t : r.tuples())
    for (std::size_t i = 0; i < t.size(); ++i)
      if (nu(t[i]) < nu(mins[i])) mins[i] = t[i];
  return r.contains(mins);
}

std::optional<GmcWitness> is_gmc(const Language& lang, const FindOptions& opts) {
  const std::size_t n = lang.domain_size();
  const auto nus = lang.valuations();
  OperationConstraint c(n, 2);
  for (Value a = 0; a < n; ++a) {
    ValueSet ok = 0;
    for (Value y = 0; y < n; ++y) {
      bool fits = true;
      for (const auto& nu : nus) fits = fits && nu(y) <= nu(a);
      if (fits) ok |= bit(y);
    }
    c.allow({a, a}, ok);
  }
  for (auto [a, b] : all_pairs(n)) {
    CellLink link;
    link.cells = {{a, b}, {b, a}};
    for (Value u = 0; u < n; ++u)
      for (Value v = 0; v < n; ++v) {
        bool fits = true;
        for (const auto& nu : nus)
          fits = fits && gmc_cell_ok(nu, a, b, u, v) && gmc_cell_ok(nu, b, a, v, u);
        if (fits) link.allowed.push_back({u, v});
      }
    c.links.push_back(std::move(link));
  }
  auto f = find_operation(lang.relations(), c, opts);
  if (!f) return std::nullopt;
  return GmcWitness{*f};
}

std::optional<BsmWitness> is_bsm(const Language& lang, const FindOptions& opts) {
  const std::size_t n = lang.domain_size();
  if (n != 3) return std::nullopt;
  const auto gamma = lang.relations();
  for (Value b = 0; b < 3; ++b) {
    Value a = b == 0 ? 1 : 0;
    Value c = 3 - a - b;
    if (!bsm_valuation_ok(lang, a, b, c)) continue;
    OperationConstraint meet(3, 2), join(3, 2);
    for (auto* op : {&meet, &join}) {
      op->idempotent = true;
      op->commutative_on = all_pairs(3);
    }
    for (Value x : {a, c}) {
      meet.fix({x, b}, b);
      meet.fix({b, x}, b);
      join.fix({x, b}, x);
      join.fix({b, x}, x);
    }
    meet.fix({a, c}, b);
    join.fix({a, c}, b);
    auto m = find_operation(gamma, meet, opts);
    if (!m) continue;
    auto j = find_operation(gamma, join, opts);
    if (!j) continue;
    return BsmWitness{a, b, c, *m, *j};
  }
  return std::nullopt;
}

namespace {

class GwtpSearcher {
 public:
  GwtpSearcher(const Language& lang, const GwtpOptions& opts)
      : lang_(lang), opts_(opts), n_(lang.domain_size()), gamma_(lang.relations()),
        pairs_(all_pairs(n_)) {}

  GwtpSearch run() {
    GwtpSearch out;
    OperationConstraint any(n_, 2);
    omega_ = enumerate_binary_polymorphisms(gamma_, any, opts_.fpol.budget, opts_.fpol.find);
    defs_ = definable_subsets(gamma_, n_, opts_.fpol.find);
    const std::size_t np = pairs_.size();
    std::size_t fails_m = 0, fails_f = 0, fails_elim = 0;
    for (std::size_t bmask = 0; bmask < (std::size_t{1} << np); ++bmask) {
      const auto& m = arithmetical(bmask);
      std::vector<std::size_t> masks;
      for (std::size_t a = 0; a <= bmask; ++a)
        if ((a & bmask) == a) masks.push_back(a);
      if (!m) {
        fails_m += masks.size();
        continue;
      }
      for (std::size_t amask : masks) {
        auto elim = clause_two(amask);
        if (!elim) {
          ++fails_elim;
          continue;
        }
        auto fs = tournament(amask, bmask);
        if (!fs) {
          ++fails_f;
          continue;
        }
        GwtpWitness w;
        w.A = select(amask);
        w.B = select(bmask);
        w.f1 = fs->first;
        w.f2 = fs->second;
        w.m = *m;
        build_eliminations(w, *elim);
        out.witness = std::move(w);
        return out;
      }
    }
    out.reason = "no choice of A within B works: m missing for " + std::to_string(fails_m) +
                 ", elimination missing for " + std::to_string(fails_elim) +
                 ", tournament pair missing for " + std::to_string(fails_f) + " choices";
    return out;
  }

 private:
  // Per definable subset holding a pair of A, the chosen (a,b).
  using ElimChoice = std::vector<std::optional<std::pair<Value, Value>>>;

  std::vector<Pair> select(std::size_t mask) const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if ((mask >> i) & 1U) out.push_back(pairs_[i]);
    return out;
  }

  const std::optional<Operation>& arithmetical(std::size_t bmask) {
    auto it = m_cache_.find(bmask);
    if (it != m_cache_.end()) return it->second;
    OperationConstraint c(n_, 3);
    c.idempotent = true;
    c.range_in_args = true;
    for (std::size_t i = 0; i < pairs_.size(); ++i)
      if (!((bmask >> i) & 1U)) c.arithmetical_on.push_back(pairs_[i]);
    return m_cache_[bmask] = find_operation(gamma_, c, opts_.fpol.find);
  }

  const std::optional<FractionalPolymorphism>& dominating(Value a, Value b) {
    auto key = std::make_pair(a, b);
    auto it = dom_cache_.find(key);
    if (it != dom_cache_.end()) return it->second;
    return dom_cache_[key] = exists_dominating_fpol(lang_, a, b, opts_.fpol).fpol;
  }

  bool definable(ValueSet s) const {
    return std::find(defs_.begin(), defs_.end(), s) != defs_.end();
  }

  const std::optional<ElimChoice>& clause_two(std::size_t amask) {
    auto it = elim_cache_.find(amask);
    if (it != elim_cache_.end()) return it->second;
    auto a_pairs = select(amask);
    ElimChoice choice(defs_.size());
    bool ok = true;
    for (std::size_t i = 0; i < defs_.size() && ok; ++i) {
      ValueSet u = defs_[i];
      bool needed = false;
      for (auto [x, y] : a_pairs) needed = needed || (has(u, x) && has(u, y));
      if (!needed) continue;
      for (auto [x, y] : a_pairs) {
        if (!has(u, x) || !has(u, y)) continue;
        for (auto [a, b] : {std::make_pair(x, y), std::make_pair(y, x)})
          if (!choice[i] && definable(u & ~bit(b)) && dominating(a, b)) choice[i] = {a, b};
        if (choice[i]) break;
      }
      ok = choice[i].has_value();
    }
    return elim_cache_[amask] = ok ? std::optional<ElimChoice>(choice) : std::nullopt;
  }

  std::optional<std::pair<Operation, Operation>> tournament(std::size_t amask,
                                                            std::size_t bmask) const {
    std::vector<Pair> outside, icc;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      bool in_b = (bmask >> i) & 1U, in_a = (amask >> i) & 1U;
      if (!in_b) outside.push_back(pairs_[i]);
      else if (!in_a) icc.push_back(pairs_[i]);
    }
    std::map<std::size_t, const Operation*> by_signature;
    for (const auto& f : omega_) {
      bool fits = true;
      for (auto [x, y] : outside) fits = fits && f.projection_on(x, y) != 0;
      std::size_t sig = 0;
      for (std::size_t i = 0; i < icc.size() && fits; ++i) {
        auto [x, y] = icc[i];
        fits = f.idempotent_on(x, y) && f.conservative_on(x, y) && f.commutative_on(x, y);
        if (fits && f(x, y) == x) sig |= std::size_t{1} << i;
      }
      if (fits) by_signature.emplace(sig, &f);
    }
    const std::size_t all = (std::size_t{1} << icc.size()) - 1;
    std::optional<std::pair<Operation, Operation>> best;
    for (auto [sig, f] : by_signature) {
      auto g = by_signature.find(all & ~sig);
      if (g == by_signature.end()) continue;
      if (!best || *f < best->first) best = std::make_pair(*f, *g->second);
    }
    return best;
  }

  void build_eliminations(GwtpWitness& w, const ElimChoice& choice) {
    std::map<std::pair<Value, Value>, std::size_t> index;
    for (std::size_t i = 0; i < defs_.size(); ++i) {
      SubsetElimination s{defs_[i], std::nullopt};
      if (choice[i]) {
        auto key = *choice[i];
        auto it = index.find(key);
        if (it == index.end()) {
          it = index.emplace(key, w.eliminations.size()).first;
          w.eliminations.push_back({key.first, key.second, *dominating(key.first, key.second)});
        }
        s.elimination = it->second;
      }
      w.subsets.push_back(s);
    }
  }

  const Language& lang_;
  const GwtpOptions& opts_;
  std::size_t n_;
  std::vector<Relation> gamma_;
  std::vector<Pair> pairs_;
  std::vector<Operation> omega_;
  std::vector<ValueSet> defs_;
  std::map<std::size_t, std::optional<Operation>> m_cache_;
  std::map<std::pair<Value, Value>, std::optional<FractionalPolymorphism>> dom_cache_;
  std::map<std::size_t, std::optional<ElimChoice>> elim_cache_;
};

}  // namespace

GwtpSearch is_gwtp(const Language& lang, const GwtpOptions& opts) {
  if (lang.domain_size() > 3)
    throw ContractError("the general GWTP search is limited to three elements");
  return GwtpSearcher(lang, opts).run();
}

std::optional<Operation> find_siggers(const std::vector<Relation>& gamma,
                                      std::size_t n, const FindOptions& opts) {
  OperationConstraint c(n, 4);
  c.idempotent = true;
  for (Value a = 0; a < n; ++a)
    for (Value r = 0; r < n; ++r)
      for (Value e = 0; e < n; ++e) {
        Tuple x{a, r, e, a}, y{r, a, r, e};
        if (x != y) c.equal(x, y);
      }
  return find_operation(gamma, c, opts);
}

bool is_siggers(const Operation& s) {
  if (s.arity() != 4 || !s.is_idempotent()) return false;
  const std::size_t n = s.domain_size();
  for (Value a = 0; a < n; ++a)
    for (Value r = 0; r < n; ++r)
      for (Value e = 0; e < n; ++e) {
        Tuple x{a, r, e, a}, y{r, a, r, e};
        if (s(x) != s(y)) return false;
      }
  return true;
}

bool csp_tractable(const std::vector<Relation>& gamma, std::size_t n,
                   const FindOptions& opts) {
  return find_siggers(gamma, n, opts).has_value();
}

std::string to_string(PairOperationKind k) {
  switch (k) {
    case PairOperationKind::kSemilattice: return "semilattice";
    case PairOperationKind::kMajority: return "majority";
    case PairOperationKind::kMinority: return "minority";
  }
  return "?";
}

namespace {

// Argument tuples over {a,b} of the shape (x,x,y), (x,y,x), (y,x,x).
std::vector<std::pair<Tuple, Value>> near_unanimous(Value a, Value b, bool majority) {
  std::vector<std::pair<Tuple, Value>> out;
  for (auto [x, y] : {std::make_pair(a, b), std::make_pair(b, a)}) {
    Value v = majority ? x : y;
    out.push_back({{x, x, y}, v});
    out.push_back({{x, y, x}, v});
    out.push_back({{y, x, x}, v});
  }
  return out;
}

}  // namespace

bool acts_as(const Operation& op, PairOperationKind kind, Pair pair) {
  auto [a, b] = pair;
  if (kind == PairOperationKind::kSemilattice)
    return op.arity() == 2 && op.idempotent_on(a, b) && op.conservative_on(a, b) &&
           op.commutative_on(a, b);
  if (op.arity() != 3 || op(a, a, a) != a || op(b, b, b) != b) return false;
  for (const auto& [t, v] : near_unanimous(a, b, kind == PairOperationKind::kMajority))
    if (op(t) != v) return false;
  return true;
}

std::optional<PairOperation> find_pair_operation(const std::vector<Relation>& gamma,
                                                 std::size_t n, Pair pair,
                                                 const FindOptions& opts) {
  auto [a, b] = pair;
  OperationConstraint semi(n, 2);
  semi.fix({a, a}, a);
  semi.fix({b, b}, b);
  semi.allow({a, b}, bit(a) | bit(b));
  semi.commutative_on.push_back(pair);
  if (auto f = find_operation(gamma, semi, opts))
    return PairOperation{pair, PairOperationKind::kSemilattice, *f};
  for (auto kind : {PairOperationKind::kMajority, PairOperationKind::kMinority}) {
    OperationConstraint c(n, 3);
    c.fix({a, a, a}, a);
    c.fix({b, b, b}, b);
    for (const auto& [t, v] : near_unanimous(a, b, kind == PairOperationKind::kMajority))
      c.fix(t, v);
    if (auto f = find_operation(gamma, c, opts)) return PairOperation{pair, kind, *f};
  }
  return std::nullopt;
}

PairTractability conservative_pair_operations(const std::vector<Relation>& gamma,
                                              std::size_t n, const FindOptions& opts) {
  PairTractability out;
  for (Pair p : all_pairs(n)) {
    auto op = find_pair_operation(gamma, n, p, opts);
    if (!op) {
      out.missing = p;
      break;
    }
    out.operations.push_back(*op);
  }
  return out;
}

bool has_icc_pair(const std::vector<Relation>& gamma, std::size_t n, Pair pair,
                  const FindOptions& opts) {
  auto [a, b] = pair;
  for (Value target : {a, b}) {
    OperationConstraint c(n, 2);
    c.fix({a, a}, a);
    c.fix({b, b}, b);
    c.fix({a, b}, target);
    c.fix({b, a}, target);
    if (!find_operation(gamma, c, opts)) return false;
  }
  return true;
}

}  // namespace vcsp
