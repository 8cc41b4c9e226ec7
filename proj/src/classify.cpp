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

#include "vcsp/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "vcsp/brute_force.hpp"
#include "vcsp/csp.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/ppdef.hpp"

namespace vcsp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPO: return "PO";
    case Verdict::kNPHard: return "NP-hard";
    case Verdict::kUnsupported: return "Unsupported";
  }
  return "?";
}

namespace {

std::string pstr(const Domain& d, Pair p) {
  return "(" + d.label(p.first) + "," + d.label(p.second) + ")";
}

std::string fresh(const Language& lang, std::string stem) {
  while (lang.find_relation(stem)) stem += "'";
  return stem;
}

bool without_down_down(const std::vector<Relation>& gamma, std::size_t n, Pair p, Pair q,
                       const FindOptions& opts) {
  OperationConstraint c(n, 2);
  c.in_down = {p};
  if (q != p) c.in_down.push_back(q);
  return !find_operation(gamma, c, opts);
}

bool only_projections_on(const std::vector<Relation>& gamma, std::size_t n, Pair p,
                         const FindOptions& opts) {
  OperationConstraint c(n, 2);
  c.commutative_on = {p};
  return !find_operation(gamma, c, opts);
}

bool arithmetical_on_pair(const std::vector<Relation>& gamma, std::size_t n, Pair p,
                          const FindOptions& opts) {
  OperationConstraint c(n, 3);
  c.arithmetical_on = {p};
  return find_operation(gamma, c, opts).has_value();
}

// Copies `from` into `into`; variables listed in `identify` are glued to
// existing ones, weights are multiplied by `scale`.
void embed(MinHomInstance& into, const MinHomInstance& from, const std::string& prefix,
           const std::map<Variable, Variable>& identify, const Rational& scale) {
  std::vector<Variable> map(from.num_variables());
  for (Variable v = 0; v < from.num_variables(); ++v) {
    auto it = identify.find(v);
    map[v] = it != identify.end() ? it->second : into.add_variable(prefix + from.name(v));
  }
  for (const auto& c : from.constraints()) {
    std::vector<Variable> scope;
    for (Variable v : c.scope) scope.push_back(map[v]);
    into.add_constraint(scope, c.relation, c.relation_name);
  }
  for (const auto& w : from.weights()) into.add_weight(map[w.variable], w.valuation, scale * w.value);
}

GadgetCheck from_gadget(std::string name, std::string base, const Gadget& g, std::string note) {
  GadgetCheck c;
  c.name = std::move(name);
  c.base = std::move(base);
  c.instance = g.instance;
  c.output = g.output;
  c.relation = g.relation;
  c.note = std::move(note);
  return c;
}

GadgetCheck valuation_gadget(const Language& lang, const SeparatingValuation& s, Pair p) {
  GadgetCheck c;
  c.name = fresh(lang, "nu" + pstr(lang.domain(), p));
  c.base = "input";
  c.instance = s.instance;
  c.output = {s.variable};
  c.relation = Relation::unary(lang.domain_size(), full_set(lang.domain_size()));
  c.expresses = s.valuation;
  c.note = "expresses nu with inf > nu(" + lang.domain().label(p.first) + ") > nu(" +
           lang.domain().label(p.second) + ")";
  return c;
}

void finish(Certificate& cert, const ClassifyOptions& opts) { cert.checks = run_checks(cert, opts); }

std::vector<std::vector<ValueSet>> unary_candidates(std::size_t n) {
  std::vector<ValueSet> sets;
  for (ValueSet s = 1; s <= full_set(n); ++s) sets.push_back(s);
  std::vector<std::vector<ValueSet>> all;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sets.size()); ++mask) {
    std::vector<ValueSet> s;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if ((mask >> i) & 1U) s.push_back(sets[i]);
    all.push_back(std::move(s));
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return all;
}

}  // namespace

Certificate classify_minsol3(const Language& lang, const ClassifyOptions& opts) {
  Certificate cert;
  cert.problem = "minsol3";
  cert.language = lang;
  auto unsupported = [&](std::string why) {
    cert.verdict = Verdict::kUnsupported;
    cert.explanation = std::move(why);
    finish(cert, opts);
    return cert;
  };
  if (lang.domain_size() != 3) return unsupported("the domain does not have three elements");
  if (lang.named_valuations().size() != 1) return unsupported("MinSol takes exactly one valuation");
  const Valuation& nu = lang.valuation(0);
  if (!nu.is_finite()) return unsupported("the valuation takes the value inf");
  if (!nu.is_injective()) return unsupported("the valuation is not injective, an open case");

  const FindOptions& find = opts.gwtp.fpol.find;
  cert.min_core = min_core(lang, find);
  const Language& core = cert.min_core->core;
  const std::size_t n = core.domain_size();
  if (auto w = is_gmc(core, find)) {
    cert.verdict = Verdict::kPO;
    cert.witness = *w;
    cert.explanation = "the min-core is of type GMC";
    finish(cert, opts);
    return cert;
  }
  if (auto w = is_bsm(core, find)) {
    cert.verdict = Verdict::kPO;
    cert.witness = *w;
    cert.explanation = "the min-core is of type BSM";
    finish(cert, opts);
    return cert;
  }

  std::set<std::vector<ValueSet>> seen;
  for (const auto& s : unary_candidates(n)) {
    Language ext = with_unaries(core, s);
    if (!seen.insert(definable_subsets(ext.relations(), n, find)).second) continue;
    UnarySearchStep step{s, false, std::nullopt};
    auto sig = find_siggers(with_constants(ext).relations(), n, find);
    step.csp = sig.has_value();
    if (step.csp) {
      auto g = is_gwtp(ext, opts.gwtp);
      step.gwtp = g.witness.has_value();
      if (g.witness) {
        cert.search.push_back(step);
        cert.verdict = Verdict::kPO;
        cert.unaries = s;
        cert.witness = *g.witness;
        cert.siggers = *sig;
        cert.explanation =
            (s.empty() ? std::string("the min-core")
                       : "the min-core with " + std::to_string(s.size()) + " added unary relation" +
                             (s.size() == 1 ? "" : "s")) +
            " is of type GWTP and its CSP with constants has a Siggers polymorphism";
        finish(cert, opts);
        return cert;
      }
    }
    cert.search.push_back(step);
  }

  cert.verdict = Verdict::kNPHard;
  cert.explanation =
      "the min-core is neither GMC nor BSM and no added unary relations give a tractable "
      "CSP together with type GWTP";
  HardnessEvidence ev;
  ev.absent.push_back({"gmc", {}, "core"});
  ev.absent.push_back({"bsm", {}, "core"});
  if (n == 3) {
    try {
      auto c = extract_constants(core);
      ev.gadgets.push_back(from_gadget(fresh(core, "gamma" + std::to_string(c.gamma.index)), "core",
                                       c.gamma.gadget,
                                       "weighted pp-definition of gamma_" +
                                           std::to_string(c.gamma.index)));
      for (Value v = 0; v < 3; ++v)
        ev.gadgets.push_back(from_gadget(fresh(core, "const_" + core.domain().label(v)), "core",
                                         c.constants[v],
                                         "weighted pp-definition of {" + core.domain().label(v) + "}"));
    } catch (const std::logic_error& e) {
      cert.explanation += "; no gadget: " + std::string(e.what());
    }
  }
  cert.hardness = ev;
  finish(cert, opts);
  return cert;
}

namespace {

struct TwoColouring {
  std::vector<int> side;
  std::vector<std::size_t> component;
  std::vector<std::size_t> odd_cycle;  // vertex indices, empty when bipartite
};

TwoColouring colour(std::size_t nv, const std::vector<std::vector<std::size_t>>& adj) {
  TwoColouring t;
  t.side.assign(nv, -1);
  t.component.assign(nv, 0);
  std::vector<std::size_t> parent(nv), depth(nv, 0);
  for (std::size_t s = 0; s < nv; ++s) {
    if (t.side[s] != -1) continue;
    t.side[s] = 0;
    t.component[s] = s;
    parent[s] = s;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (v == u) {
          t.odd_cycle = {u};
          return t;
        }
        if (t.side[v] == -1) {
          t.side[v] = 1 - t.side[u];
          t.component[v] = s;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (t.side[v] == t.side[u]) {
          std::vector<std::size_t> up, down;
          std::size_t x = u, y = v;
          while (depth[x] > depth[y]) up.push_back(x), x = parent[x];
          while (depth[y] > depth[x]) down.push_back(y), y = parent[y];
          while (x != y) {
            up.push_back(x);
            down.push_back(y);
            x = parent[x];
            y = parent[y];
          }
          up.push_back(x);
          t.odd_cycle = up;
          t.odd_cycle.insert(t.odd_cycle.end(), down.rbegin(), down.rend());
          return t;
        }
      }
    }
  }
  return t;
}

}  // namespace

Certificate classify_conservative(const Language& lang, const ClassifyOptions& opts) {
  if (!lang.is_conservative()) throw ContractError("language is not conservative");
  Certificate cert;
  cert.problem = "conservative";
  cert.language = lang;
  const std::size_t n = lang.domain_size();
  if (n > kConservativeMaxDomain) {
    cert.verdict = Verdict::kUnsupported;
    cert.explanation = "the domain exceeds " + std::to_string(kConservativeMaxDomain) + " elements";
    finish(cert, opts);
    return cert;
  }
  const Domain& dom = lang.domain();
  const auto gamma = lang.relations();
  const FindOptions& find = opts.gwtp.fpol.find;

  auto pairs = conservative_pair_operations(gamma, n, find);
  cert.pair_operations = pairs.operations;
  if (pairs.missing) {
    cert.verdict = Verdict::kNPHard;
    cert.explanation = "the CSP is NP-hard: no semilattice, majority or minority polymorphism on " +
                       pstr(dom, *pairs.missing);
    cert.hardness = HardnessEvidence{
        {{"pair-operation", {pairs.missing->first, pairs.missing->second}, "input"}}, {}};
    finish(cert, opts);
    return cert;
  }

  ConservativeAnalysis an;
  for (Pair p : all_pairs(n))
    if (!(only_projections_on(gamma, n, p, find) && arithmetical_on_pair(gamma, n, p, find)))
      an.B.push_back(p);
  std::map<Pair, DominationQuery> queries;
  std::vector<Elimination> elims;
  for (Pair p : an.B) {
    auto [x, y] = p;
    auto q = exists_dominating_fpol(lang, x, y, opts.gwtp.fpol);
    if (q.fpol) {
      an.A.push_back(p);
      elims.push_back({x, y, *q.fpol});
      continue;
    }
    auto r = exists_dominating_fpol(lang, y, x, opts.gwtp.fpol);
    if (r.fpol) {
      an.A.push_back(p);
      elims.push_back({y, x, *r.fpol});
      continue;
    }
    queries.emplace(Pair(x, y), std::move(q));
    queries.emplace(Pair(y, x), std::move(r));
  }
  for (Pair p : an.B)
    if (std::find(an.A.begin(), an.A.end(), p) == an.A.end()) {
      an.M.push_back(p);
      an.M.push_back({p.second, p.first});
    }
  std::sort(an.M.begin(), an.M.end());
  std::vector<std::vector<std::size_t>> adj(an.M.size());
  for (std::size_t i = 0; i < an.M.size(); ++i)
    for (std::size_t j = i; j < an.M.size(); ++j)
      if (without_down_down(gamma, n, an.M[i], an.M[j], find)) {
        an.edges.push_back({an.M[i], an.M[j]});
        adj[i].push_back(j);
        if (j != i) adj[j].push_back(i);
      }

  auto separating = [&](Pair p) {
    return construct_separating_valuation(lang, queries.at(p), find.search);
  };

  for (Pair p : an.B) {
    if (std::find(an.A.begin(), an.A.end(), p) != an.A.end()) continue;
    if (has_icc_pair(gamma, n, p, find)) continue;
    Pair q{p.second, p.first};
    HardnessEvidence ev;
    ev.absent = {{"icc-pair", {p.first, p.second}, "input"},
                 {"dominating", {p.first, p.second}, "input"},
                 {"dominating", {q.first, q.second}, "input"}};
    ev.gadgets.push_back(valuation_gadget(lang, separating(p), p));
    ev.gadgets.push_back(valuation_gadget(lang, separating(q), q));
    cert.verdict = Verdict::kNPHard;
    cert.explanation = "both orders of " + pstr(dom, p) +
                       " are expressible but the two ICC operations on it are not both "
                       "polymorphisms";
    cert.analysis = an;
    cert.hardness = ev;
    finish(cert, opts);
    return cert;
  }

  TwoColouring tc = colour(an.M.size(), adj);
  if (!tc.odd_cycle.empty()) {
    for (std::size_t i : tc.odd_cycle) an.odd_cycle.push_back(an.M[i]);
    HardnessEvidence ev;
    const std::size_t len = an.odd_cycle.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < len; ++i) {
      auto [a, b] = an.odd_cycle[i];
      auto [c, d] = an.odd_cycle[(i + 1) % len];
      ev.absent.push_back({"down-down", {a, b, c, d}, "input"});
      Relation cross = pictogram(Pictogram::kCross, n, a, b, c, d);
      std::string name = fresh(lang, "edge" + std::to_string(i));
      names.push_back(name);
      FindOptions wide = find;
      wide.max_arity = std::max(find.max_arity, std::size_t{3});
      if (pp_definable(gamma, cross, wide).definable) {
        ev.gadgets.push_back(from_gadget(name, "input", pp_gadget(lang, cross),
                                         "pp-definition of cross" + pstr(dom, {a, b}) +
                                             pstr(dom, {c, d})));
        continue;
      }
      Relation mis = pictogram(Pictogram::kMis, n, a, b, c, d);
      if (!pp_definable(gamma, mis, wide).definable)
        throw std::logic_error("edge " + pstr(dom, {a, b}) + pstr(dom, {c, d}) +
                               " has neither cross nor mis in the pp-closure");
      Gadget base = pp_gadget(lang, mis);
      auto nu = separating({a, b});
      auto tau = separating({c, d});
      Rational k = (nu.valuation(a).value() - nu.valuation(b).value()) /
                   (tau.valuation(c).value() - tau.valuation(d).value());
      Gadget g = base;
      embed(g.instance, nu.instance, "nu.", {{nu.variable, g.output[0]}}, Rational(1));
      embed(g.instance, tau.instance, "tau.", {{tau.variable, g.output[1]}}, k);
      g.relation = cross;
      if (!check_gadget(lang, g))
        throw std::logic_error("mis with separating valuations does not give cross");
      ev.gadgets.push_back(from_gadget(name, "input", g,
                                       "mis" + pstr(dom, {a, b}) + pstr(dom, {c, d}) +
                                           " weighted towards cross"));
    }
    auto [a0, b0] = an.odd_cycle[0];
    if (len > 1) {
      GadgetCheck chain;
      chain.name = fresh(lang, "cycle");
      chain.base = "input";
      chain.uses = names;
      std::vector<Variable> x;
      for (std::size_t i = 0; i <= len; ++i)
        x.push_back(chain.instance.add_variable("x" + std::to_string(i)));
      for (std::size_t i = 0; i < len; ++i)
        chain.instance.add_constraint({x[i], x[i + 1]}, ev.gadgets[i].relation, names[i]);
      chain.output = {x.front(), x.back()};
      chain.relation = pictogram(Pictogram::kCross, n, a0, b0, a0, b0);
      chain.note = "composition along the odd cycle";
      ev.gadgets.push_back(chain);
    }
    cert.verdict = Verdict::kNPHard;
    cert.explanation = "T has an odd cycle of length " + std::to_string(len) + ", so cross" +
                       pstr(dom, {a0, b0}) + pstr(dom, {a0, b0}) +
                       " is weighted pp-definable and no commutative polymorphism exists on " +
                       pstr(dom, {std::min(a0, b0), std::max(a0, b0)});
    cert.analysis = an;
    cert.hardness = ev;
    finish(cert, opts);
    return cert;
  }

  // Bipartite: f takes down(a,b) on side 0, g on side 1. Components may
  // need flipping relative to each other.
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < an.M.size(); ++i)
    if (tc.component[i] == i) roots.push_back(i);
  std::optional<std::pair<Operation, Operation>> fg;
  std::vector<int> side;
  for (std::size_t flip = 0; flip < (std::size_t{1} << roots.size()) && !fg; ++flip) {
    side = tc.side;
    for (std::size_t i = 0; i < an.M.size(); ++i) {
      std::size_t r = std::find(roots.begin(), roots.end(), tc.component[i]) - roots.begin();
      if ((flip >> r) & 1U) side[i] = 1 - side[i];
    }
    OperationConstraint cf(n, 2), cg(n, 2);
    for (std::size_t i = 0; i < an.M.size(); ++i) (side[i] == 0 ? cf : cg).in_down.push_back(an.M[i]);
    auto f = find_operation(gamma, cf, find);
    if (!f) continue;
    auto g = find_operation(gamma, cg, find);
    if (g) fg = std::make_pair(*f, *g);
  }
  if (!fg) throw std::logic_error("T is bipartite but no tournament pair was found");
  an.side = side;

  OperationConstraint cm(n, 3);
  cm.idempotent = true;
  cm.range_in_args = true;
  for (Pair p : all_pairs(n))
    if (std::find(an.B.begin(), an.B.end(), p) == an.B.end()) cm.arithmetical_on.push_back(p);
  auto m = find_operation(gamma, cm, find);
  if (!m) throw std::logic_error("no polymorphism is arithmetical off B");

  GwtpWitness w;
  w.A = an.A;
  w.B = an.B;
  w.f1 = fg->first;
  w.f2 = fg->second;
  w.m = *m;
  w.eliminations = elims;
  for (ValueSet u : definable_subsets(gamma, n, find)) {
    SubsetElimination s{u, std::nullopt};
    for (std::size_t i = 0; i < elims.size() && !s.elimination; ++i)
      if (has(u, elims[i].a) && has(u, elims[i].b)) s.elimination = i;
    w.subsets.push_back(s);
  }
  cert.verdict = Verdict::kPO;
  cert.explanation = "the CSP is tractable pair by pair and T is bipartite, giving type GWTP";
  cert.analysis = an;
  cert.witness = w;
  finish(cert, opts);
  return cert;
}

// ---------------------------------------------------------------- checks

namespace {

struct Checker {
  const Certificate& cert;
  const ClassifyOptions& opts;
  std::vector<CheckResult> out;

  void add(std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  }

  const Language* base(const std::string& b) const {
    if (b == "input") return &cert.language;
    if (b == "core" && cert.min_core) return &cert.min_core->core;
    return nullptr;
  }

  void min_core() {
    const auto& mc = *cert.min_core;
    Language cur = cert.language;
    std::vector<Value> emb(cur.domain_size());
    for (Value v = 0; v < emb.size(); ++v) emb[v] = v;
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < mc.chain.size() && ok; ++i) {
      const auto& st = mc.chain[i];
      const auto dec = decreasing_images(cur);
      ok = st.domain == cur.domain() && st.map.arity() == 1 &&
           st.map.domain_size() == cur.domain_size() && is_polymorphism(st.map, cur.relations()) &&
           st.map.image() != full_set(cur.domain_size());
      for (Value x = 0; ok && x < cur.domain_size(); ++x) ok = has(dec[x], st.map(x));
      if (!ok) {
        why = "step " + std::to_string(i) + " is not a shrinking unary polymorphism";
        break;
      }
      std::vector<Value> next;
      for (Value v : members(st.map.image())) next.push_back(emb[v]);
      emb = next;
      cur = restrict_language(cur, st.map.image());
    }
    if (ok) {
      ok = cur.domain() == mc.core.domain() && cur.relations() == mc.core.relations() &&
           cur.valuations() == mc.core.valuations() && emb == mc.embedding;
      if (!ok) why = "the chain does not end in the recorded core";
    }
    if (ok) {
      ok = !find_shrinking_map(mc.core, opts.gwtp.fpol.find);
      if (!ok) why = "the core still has a shrinking map";
    }
    add("min-core", ok, why);
  }

  void witness() {
    const Language* l = base(cert.problem == "minsol3" ? "core" : "input");
    if (!l) return add("witness", false, "no core");
    Language ext = with_unaries(*l, cert.unaries);
    auto r = validate_witness(ext, *cert.witness, opts.gwtp.fpol.find);
    add("witness " + type_name(*cert.witness), r.ok(), r.ok() ? "" : r.violations.front());
  }

  void siggers() {
    const Language* l = base("core");
    if (!l) return add("siggers", false, "no core");
    Language ext = with_constants(with_unaries(*l, cert.unaries));
    const auto& s = *cert.siggers;
    bool ok = s.arity() == 4 && s.domain_size() == ext.domain_size() && is_siggers(s) &&
              is_polymorphism(s, ext.relations());
    add("siggers", ok, "not a Siggers polymorphism of the core with constants and S");
  }

  void pair_operations() {
    const std::size_t n = cert.language.domain_size();
    const auto gamma = cert.language.relations();
    bool ok = true;
    for (const auto& p : cert.pair_operations)
      ok = ok && p.op.domain_size() == n && acts_as(p.op, p.kind, p.pair) &&
           is_polymorphism(p.op, gamma);
    if (cert.verdict == Verdict::kPO || cert.analysis) {
      std::vector<Pair> covered;
      for (const auto& p : cert.pair_operations) covered.push_back(p.pair);
      ok = ok && covered == all_pairs(n);
    }
    add("pair operations", ok, "a pair operation fails or a pair is uncovered");
  }

  void analysis() {
    const auto& an = *cert.analysis;
    const Language& l = cert.language;
    const std::size_t n = l.domain_size();
    const auto gamma = l.relations();
    const auto& find = opts.gwtp.fpol.find;
    auto in = [](const std::vector<Pair>& v, Pair p) {
      return std::find(v.begin(), v.end(), p) != v.end();
    };
    bool ok = true;
    for (Pair p : all_pairs(n)) {
      bool outside = only_projections_on(gamma, n, p, find) && arithmetical_on_pair(gamma, n, p, find);
      ok = ok && outside != in(an.B, p);
    }
    add("analysis B", ok, "B does not match the projection and arithmetical tests");
    ok = std::is_sorted(an.A.begin(), an.A.end());
    for (Pair p : an.A)
      ok = ok && in(an.B, p) &&
           (exists_dominating_fpol(l, p.first, p.second, opts.gwtp.fpol).fpol ||
            exists_dominating_fpol(l, p.second, p.first, opts.gwtp.fpol).fpol);
    std::vector<Pair> m;
    for (Pair p : an.B)
      if (!in(an.A, p)) {
        auto [x, y] = p;
        m.push_back(p);
        m.push_back({y, x});
        ok = ok && !exists_dominating_fpol(l, x, y, opts.gwtp.fpol).fpol &&
             !exists_dominating_fpol(l, y, x, opts.gwtp.fpol).fpol;
      }
    std::sort(m.begin(), m.end());
    ok = ok && m == an.M;
    add("analysis A and M", ok, "A is not the set of dominated pairs of B, or M is wrong");
    ok = true;
    std::set<std::pair<Pair, Pair>> listed(an.edges.begin(), an.edges.end());
    for (std::size_t i = 0; i < an.M.size(); ++i)
      for (std::size_t j = i; j < an.M.size(); ++j)
        ok = ok && without_down_down(gamma, n, an.M[i], an.M[j], find) ==
                       (listed.count({an.M[i], an.M[j]}) > 0);
    ok = ok && listed.size() == an.edges.size();
    add("analysis edges", ok, "the edge list of T differs from the down-down tests");
    auto edge = [&](Pair u, Pair v) { return listed.count({std::min(u, v), std::max(u, v)}) > 0; };
    if (!an.odd_cycle.empty()) {
      ok = an.odd_cycle.size() % 2 == 1;
      for (std::size_t i = 0; i < an.odd_cycle.size(); ++i)
        ok = ok && edge(an.odd_cycle[i], an.odd_cycle[(i + 1) % an.odd_cycle.size()]);
      add("odd cycle", ok, "not an odd closed walk of T");
    } else if (!an.side.empty() || an.M.empty()) {
      ok = an.side.size() == an.M.size();
      for (const auto& [u, v] : an.edges) {
        if (!ok) break;
        auto iu = std::find(an.M.begin(), an.M.end(), u) - an.M.begin();
        auto iv = std::find(an.M.begin(), an.M.end(), v) - an.M.begin();
        ok = an.side[iu] != an.side[iv];
      }
      if (ok && cert.witness) {
        const auto& w = std::get<GwtpWitness>(*cert.witness);
        for (std::size_t i = 0; i < an.M.size() && ok; ++i) {
          auto [a, b] = an.M[i];
          const Operation& f = an.side[i] == 0 ? w.f1 : w.f2;
          ok = f(a, b) == b && f(b, a) == b;
        }
        ok = ok && w.A == an.A && w.B == an.B;
      }
      add("bipartition", ok, "the sides are not a proper colouring matching f1 and f2");
    }
  }

  void absence(const AbsenceClaim& c) {
    const Language* l = base(c.base);
    std::string name = "absent " + c.kind;
    if (!l) return add(name, false, "unknown base");
    const std::size_t n = l->domain_size();
    const auto gamma = l->relations();
    const auto& find = opts.gwtp.fpol.find;
    for (Value v : c.values)
      if (v >= n) return add(name, false, "value outside the domain");
    auto pr = [&](std::size_t i) { return Pair(c.values.at(i), c.values.at(i + 1)); };
    bool ok = false;
    if (c.kind == "pair-operation" && c.values.size() == 2) {
      ok = !find_pair_operation(gamma, n, pr(0), find);
    } else if (c.kind == "icc-pair" && c.values.size() == 2) {
      ok = !has_icc_pair(gamma, n, pr(0), find);
    } else if (c.kind == "down-down" && c.values.size() == 4) {
      ok = without_down_down(gamma, n, pr(0), pr(2), find);
    } else if (c.kind == "dominating" && c.values.size() == 2) {
      ok = !exists_dominating_fpol(*l, c.values[0], c.values[1], opts.gwtp.fpol).fpol;
    } else if (c.kind == "gmc" && c.values.empty()) {
      ok = !is_gmc(*l, find);
    } else if (c.kind == "bsm" && c.values.empty()) {
      ok = !is_bsm(*l, find);
    } else {
      return add(name, false, "unknown claim");
    }
    std::string args;
    for (Value v : c.values) args += (args.empty() ? "" : ",") + l->domain().label(v);
    out.push_back({name + (args.empty() ? "" : " " + args), ok, ok ? "" : "the object exists"});
  }

  void gadgets(const std::vector<GadgetCheck>& gs) {
    std::map<std::string, Relation> done;
    for (const auto& g : gs) {
      std::string name = "gadget " + g.name;
      const Language* l = base(g.base);
      if (!l) {
        add(name, false, "unknown base");
        continue;
      }
      Language ext = *l;
      bool ok = !l->find_relation(g.name);
      for (const auto& u : g.uses) {
        auto it = done.find(u);
        if (it == done.end() || ext.find_relation(u)) {
          ok = false;
          break;
        }
        ext.add_relation(it->second, u, false);
      }
      if (!ok) {
        add(name, false, "uses an unknown or clashing relation");
        continue;
      }
      std::string why;
      try {
        g.instance.check(ext);
        if (g.expresses) {
          ok = g.output.size() == 1 &&
               expressed_valuation(ext, g.instance, g.output[0], opts.gwtp.fpol.find.search) ==
                   *g.expresses;
          why = "expresses a different valuation";
        } else {
          ok = optimal_projection(ext, g.instance, g.output, opts.gwtp.fpol.find.search) ==
               g.relation;
          why = "optimal projection differs";
        }
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      add(name, ok, why);
      if (ok) done.emplace(g.name, g.relation);
    }
  }

  void run() {
    if (cert.schema_version != kCertificateSchemaVersion) add("schema", false, "unknown version");
    if (cert.min_core) min_core();
    if (cert.witness) witness();
    if (cert.siggers) siggers();
    if (cert.problem == "conservative" && cert.verdict != Verdict::kUnsupported) pair_operations();
    if (cert.analysis) analysis();
    if (cert.verdict == Verdict::kPO && !cert.witness) add("witness", false, "PO without a witness");
    if (cert.hardness) {
      for (const auto& c : cert.hardness->absent) absence(c);
      gadgets(cert.hardness->gadgets);
    }
  }
};

}  // namespace

std::vector<CheckResult> run_checks(const Certificate& cert, const ClassifyOptions& opts) {
  Checker c{cert, opts, {}};
  c.run();
  return c.out;
}

}  // namespace vcsp
