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

#include "vcsp/extract.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "vcsp/csp.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/mincore.hpp"
#include "vcsp/ppdef.hpp"
#include "vcsp/types.hpp"

namespace vcsp {

bool check_gadget(const Language& lang, const Gadget& g) {
  return optimal_projection(lang, g.instance, g.output) == g.relation;
}

std::vector<Relation> gamma_relations(const Valuation& nu) {
  if (nu.domain_size() != 3) throw ContractError("gamma relations live on three elements");
  auto o = nu.order();
  Value a = o[0], b = o[1], c = o[2];
  auto r = [](std::vector<Tuple> ts) { return Relation(3, 2, std::move(ts)); };
  return {r({{c, a}, {a, c}}),         r({{b, a}, {a, b}}), r({{b, c}, {c, b}}),
          r({{c, a}, {b, c}}),         r({{b, a}, {a, c}}), r({{c, a}, {b, b}}),
          r({{c, a}, {b, b}, {a, c}})};
}

namespace {

struct Term {
  Variable variable;
  Rational weight;
};

// Crisp instance plus weight layers on the single valuation; earlier layers
// take lexicographic priority. `rel` is the exact optimal projection onto
// `out`, maintained by the operations below.
struct Layered {
  MinHomInstance inst;
  std::vector<std::vector<Term>> layers;
  std::vector<Variable> out;
  Relation rel;
};

std::string relation_name(const Language& lang, const Relation& r) {
  for (const auto& nr : lang.named_relations())
    if (nr.relation == r) return nr.name;
  return {};
}

Layered from_relation(const Language& lang, const Relation& r) {
  Layered g;
  std::vector<Variable> scope;
  for (std::size_t i = 0; i < r.arity(); ++i)
    scope.push_back(g.inst.add_variable("x" + std::to_string(i + 1)));
  g.inst.add_constraint(scope, r, relation_name(lang, r));
  g.out = scope;
  g.rel = r;
  return g;
}

Rational finite(const ExtRational& q) {
  if (!q.is_finite()) throw ContractError("gadget construction needs a finite valuation");
  return q.value();
}

// New lowest-priority layer sum_i w_i nu(out_i); rel shrinks to its argmin.
Layered minimize(const Layered& g, const Valuation& nu, const std::vector<Rational>& w) {
  Layered h = g;
  std::vector<Term> layer;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) layer.push_back({g.out[i], w[i]});
  h.layers.push_back(layer);
  std::vector<Tuple> best;
  Rational best_cost;
  for (const Tuple& t : g.rel.tuples()) {
    Rational cost = 0;
    for (std::size_t i = 0; i < w.size(); ++i) cost += w[i] * finite(nu(t[i]));
    if (best.empty() || cost < best_cost) {
      best = {t};
      best_cost = cost;
    } else if (cost == best_cost) {
      best.push_back(t);
    }
  }
  h.rel = Relation(g.rel.domain_size(), g.rel.arity(), best);
  return h;
}

Layered project_out(const Layered& g, const std::vector<std::size_t>& keep) {
  Layered h = g;
  h.out.clear();
  for (std::size_t i : keep) h.out.push_back(g.out[i]);
  h.rel = project(g.rel, keep);
  return h;
}

Rational lcm_denominators(const std::vector<Term>& layer, const Valuation& nu) {
  mpz_class l = 1;
  for (const auto& t : layer)
    for (const auto& v : nu.values()) {
      Rational q = t.weight * finite(v);
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
  return Rational(l);
}

Gadget materialize(const Layered& g, const Valuation& nu, std::size_t valuation) {
  Rational lo = finite(nu.values().front()), hi = lo;
  for (const auto& v : nu.values()) {
    lo = std::min(lo, finite(v));
    hi = std::max(hi, finite(v));
  }
  const std::size_t k = g.layers.size();
  std::vector<Rational> scale(k, Rational(1));
  Rational below = 0;  // sum over lower layers of scale * range
  for (std::size_t i = k; i-- > 0;) {
    Rational l = lcm_denominators(g.layers[i], nu);
    mpz_class f;
    Rational prod = l * below;
    mpz_fdiv_q(f.get_mpz_t(), prod.get_num_mpz_t(), prod.get_den_mpz_t());
    scale[i] = Rational(f + 1);
    Rational range = 0;
    for (const auto& t : g.layers[i]) range += t.weight * (hi - lo);
    below += scale[i] * range;
  }
  Gadget out;
  out.instance = g.inst;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& t : g.layers[i])
      out.instance.add_weight(t.variable, valuation, scale[i] * t.weight);
  out.output = g.out;
  out.relation = g.rel;
  return out;
}

// Appends h's variables, constraints and layers; returns the offset map.
std::vector<Variable> merge(Layered& g, const Layered& h, const std::string& prefix) {
  std::vector<Variable> map;
  for (Variable v = 0; v < h.inst.num_variables(); ++v)
    map.push_back(g.inst.add_variable(prefix + h.inst.name(v)));
  for (const auto& c : h.inst.constraints()) {
    std::vector<Variable> scope;
    for (Variable v : c.scope) scope.push_back(map[v]);
    g.inst.add_constraint(scope, c.relation, c.relation_name);
  }
  for (const auto& layer : h.layers) {
    std::vector<Term> moved;
    for (const auto& t : layer) moved.push_back({map[t.variable], t.weight});
    g.layers.push_back(moved);
  }
  return map;
}

Relation crisp_projection(const MinHomInstance& inst, const std::vector<Variable>& out,
                          std::size_t n) {
  const CspModel base = model_from_instance(inst, n);
  const Relation all = Relation::full(n, out.size());
  std::vector<Tuple> ts;
  for (const Tuple& t : all.tuples()) {
    CspModel m = base;
    for (std::size_t i = 0; i < out.size(); ++i) m.restrict(out[i], bit(t[i]));
    if (solve_any(m)) ts.push_back(t);
  }
  return Relation(n, out.size(), ts);
}

// Kept constraints over the original variables, compacted into an instance.
MinHomInstance compact(const MinHomInstance& inst, const std::vector<bool>& keep,
                       std::vector<Variable>& out) {
  std::vector<bool> used(inst.num_variables(), false);
  for (Variable v : out) used[v] = true;
  const auto& cs = inst.constraints();
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (keep[i])
      for (Variable v : cs[i].scope) used[v] = true;
  MinHomInstance r;
  std::vector<Variable> map(inst.num_variables());
  for (Variable v = 0; v < inst.num_variables(); ++v)
    if (used[v]) map[v] = r.add_variable(inst.name(v));
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!keep[i]) continue;
    std::vector<Variable> scope;
    for (Variable v : cs[i].scope) scope.push_back(map[v]);
    r.add_constraint(scope, cs[i].relation, cs[i].relation_name);
  }
  for (Variable& v : out) v = map[v];
  return r;
}

// Order-|q| indicator instance: its projection onto the columns of q is the
// relation generated by q. Greedily shrunk while the projection stays q.
Layered pp_base(const Language& lang, const Relation& q) {
  const std::size_t n = lang.domain_size(), k = q.size();
  std::size_t nv = 1;
  for (std::size_t i = 0; i < k; ++i) nv *= n;
  MinHomInstance full;
  for (std::size_t c = 0; c < nv; ++c) {
    std::vector<std::string> digits(k);
    std::size_t x = c;
    for (std::size_t i = k; i-- > 0; x /= n) digits[i] = lang.domain().label(x % n);
    std::string name = "[";
    for (std::size_t i = 0; i < k; ++i) name += (i ? "," : "") + digits[i];
    full.add_variable(name + "]");
  }
  auto column = [&](const std::vector<const Tuple*>& ts, std::size_t pos) {
    std::size_t c = 0;
    for (const Tuple* t : ts) c = c * n + (*t)[pos];
    return c;
  };
  std::set<std::pair<std::vector<Variable>, std::size_t>> seen;
  for (std::size_t ri = 0; ri < lang.named_relations().size(); ++ri) {
    const auto& nr = lang.named_relations()[ri];
    const auto& tuples = nr.relation.tuples();
    if (tuples.empty()) continue;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
      std::vector<const Tuple*> ts;
      for (std::size_t i : idx) ts.push_back(&tuples[i]);
      std::vector<Variable> scope;
      for (std::size_t pos = 0; pos < nr.relation.arity(); ++pos) scope.push_back(column(ts, pos));
      if (seen.insert({scope, ri}).second) full.add_constraint(scope, nr.relation, nr.name);
      std::size_t i = k;
      while (i-- > 0 && ++idx[i] == tuples.size()) idx[i] = 0;
      if (i == std::size_t(-1)) break;
    }
  }
  std::vector<const Tuple*> qs;
  for (const Tuple& t : q.tuples()) qs.push_back(&t);
  std::vector<Variable> out;
  for (std::size_t pos = 0; pos < q.arity(); ++pos) out.push_back(column(qs, pos));

  const auto& cs = full.constraints();
  std::vector<bool> keep(cs.size(), true);
  auto still = [&](const std::vector<bool>& trial) {
    auto o = out;
    return crisp_projection(compact(full, trial, o), o, n) == q;
  };
  if (!still(keep)) throw std::logic_error("indicator instance does not define the relation");
  std::vector<bool> is_out(nv, false);
  for (Variable v : out) is_out[v] = true;
  for (Variable v = 0; v < nv; ++v) {
    if (is_out[v]) continue;
    auto trial = keep;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (std::find(cs[i].scope.begin(), cs[i].scope.end(), v) != cs[i].scope.end())
        trial[i] = false;
    if (trial != keep && still(trial)) keep = trial;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!keep[i]) continue;
    auto trial = keep;
    trial[i] = false;
    if (still(trial)) keep = trial;
  }
  Layered g;
  g.out = out;
  g.inst = compact(full, keep, g.out);
  g.rel = q;
  return g;
}

std::string label(const Language& lang, Value v) { return lang.domain().label(v); }

std::string ratstr(const Rational& q) { return q.get_str(); }

struct Extractor {
  const Language& lang;
  const Valuation& nu;
  std::vector<Relation> gammas;
  std::vector<std::string> trace;

  std::optional<std::pair<int, Layered>> binary(const Layered& g) {
    const Relation& r = g.rel;
    auto nmin = [&](const std::vector<Value>& xs) {
      return *std::min_element(xs.begin(), xs.end(),
                               [&](Value x, Value y) { return nu(x) < nu(y); });
    };
    std::vector<Value> p1, p2;
    for (const Tuple& t : r.tuples()) {
      p1.push_back(t[0]);
      p2.push_back(t[1]);
    }
    Value w1 = nmin(p1), w2 = nmin(p2);
    std::vector<Value> xs, ys;
    for (const Tuple& t : r.tuples()) {
      if (t[1] == w2) xs.push_back(t[0]);
      if (t[0] == w1) ys.push_back(t[1]);
    }
    Value q1 = nmin(xs), q2 = nmin(ys);
    Rational alpha = (finite(nu(q2)) - finite(nu(w2))) / (finite(nu(q1)) - finite(nu(w1)));
    trace.push_back("w1=" + label(lang, w1) + " w2=" + label(lang, w2) + " q1=" +
                    label(lang, q1) + " q2=" + label(lang, q2) + " alpha=" + ratstr(alpha));
    // Breakpoints where two tuples tie, tried after alpha itself.
    std::set<Rational> breaks;
    for (const Tuple& s : r.tuples())
      for (const Tuple& t : r.tuples()) {
        Rational dx = finite(nu(s[0])) - finite(nu(t[0]));
        Rational dy = finite(nu(t[1])) - finite(nu(s[1]));
        if (dx != 0 && dy / dx > 0 && dy / dx != alpha) breaks.insert(dy / dx);
      }
    std::vector<Rational> tries{alpha};
    tries.insert(tries.end(), breaks.begin(), breaks.end());
    for (const Rational& a : tries) {
      Layered h = minimize(g, nu, {a, Rational(1)});
      for (int i = 0; i < 7; ++i) {
        if (h.rel == gammas[i]) {
          trace.push_back("argmin of " + ratstr(a) + "*nu(x)+nu(y) is gamma_" +
                          std::to_string(i + 1));
          return std::make_pair(i + 1, h);
        }
        if (inverse(h.rel) == gammas[i]) {
          trace.push_back("argmin of " + ratstr(a) + "*nu(x)+nu(y) is the inverse of gamma_" +
                          std::to_string(i + 1));
          return std::make_pair(i + 1, project_out(h, {1, 0}));
        }
      }
      trace.push_back("alpha=" + ratstr(a) + " leaves " + to_string(h.rel, lang.domain()));
    }
    return std::nullopt;
  }

  std::optional<std::pair<int, Layered>> search(const Layered& g) {
    const std::size_t m = g.rel.arity();
    if (m == 2) return binary(g);
    if (m < 2) return std::nullopt;
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Rational> w(m, Rational(0));
      w[i] = 1;
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) keep.push_back(j);
      Layered h = project_out(minimize(g, nu, w), keep);
      if (check_generalised_min_closed(h.rel, nu)) continue;
      trace.push_back("coordinate " + std::to_string(i + 1) + " at its minimum, dropped");
      if (auto r = search(h)) return r;
    }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        std::vector<Rational> w(m, Rational(1));
        w[j] = w[k] = 0;
        Layered h = project_out(minimize(g, nu, w), {j, k});
        if (check_generalised_min_closed(h.rel, nu)) continue;
        trace.push_back("other coordinates at their minima, keeping " + std::to_string(j + 1) +
                        "," + std::to_string(k + 1));
        if (auto r = search(h)) return r;
      }
    // Beyond the restricted projections: plain projections, then one layer
    // of small weights on every coordinate before keeping a pair.
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> keep;
      for (std::size_t j = 0; j < m; ++j)
        if (j != i) keep.push_back(j);
      Layered h = project_out(g, keep);
      if (check_generalised_min_closed(h.rel, nu)) continue;
      trace.push_back("coordinate " + std::to_string(i + 1) + " projected away");
      if (auto r = search(h)) return r;
    }
    std::vector<Rational> w(m, Rational(0));
    for (;;) {
      std::size_t i = 0;
      while (i < m && w[i] == 3) w[i++] = 0;
      if (i == m) break;
      w[i] += 1;
      Layered weighted = minimize(g, nu, w);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j + 1; k < m; ++k) {
          Layered h = project_out(weighted, {j, k});
          if (check_generalised_min_closed(h.rel, nu)) continue;
          std::string ws;
          for (const auto& x : w) ws += (ws.empty() ? "" : ",") + ratstr(x);
          trace.push_back("weights (" + ws + "), keeping " + std::to_string(j + 1) + "," +
                          std::to_string(k + 1));
          if (auto r = binary(h)) return r;
        }
    }
    return std::nullopt;
  }
};

void require_minsol(const Language& lang) {
  if (lang.domain_size() != 3) throw ContractError("extraction needs a three-element domain");
  if (lang.named_valuations().size() != 1)
    throw ContractError("extraction needs exactly one valuation");
  const Valuation& nu = lang.valuation(0);
  if (!nu.is_finite() || !nu.is_injective())
    throw ContractError("extraction needs a finite injective valuation");
}

std::pair<int, Layered> extract_layered(const Language& lang, const Relation& r,
                                        std::vector<std::string>& trace) {
  const Valuation& nu = lang.valuation(0);
  if (check_generalised_min_closed(r, nu))
    throw ContractError("relation is generalised min-closed");
  Extractor ex{lang, nu, gamma_relations(nu), {}};
  Layered base;
  if (lang.has_relation(r)) {
    base = from_relation(lang, r);
  } else {
    FindOptions opts;
    opts.max_arity = std::max(kDefaultMaxArity, r.size());
    if (!pp_definable(lang.relations(), r, opts).definable)
      throw ContractError("relation is not pp-definable from the language");
    base = pp_base(lang, r);
    ex.trace.push_back("pp-definition of " + to_string(r, lang.domain()) + " with " +
                       std::to_string(base.inst.num_variables()) + " variables");
  }
  auto got = ex.search(base);
  trace = std::move(ex.trace);
  if (!got) throw std::logic_error("no gamma found for " + to_string(r, lang.domain()));
  return *got;
}

}  // namespace

std::optional<Relation> find_non_min_closed(const Language& lang) {
  const Valuation& nu = lang.valuation(0);
  for (const auto& nr : lang.named_relations())
    if (!check_generalised_min_closed(nr.relation, nu)) return nr.relation;
  const std::size_t n = lang.domain_size();
  std::vector<Relation> candidates;
  for (std::size_t code = 1; code < (std::size_t{1} << (n * n)); ++code) {
    std::vector<Tuple> ts;
    for (std::size_t i = 0; i < n * n; ++i)
      if ((code >> i) & 1U) ts.push_back({static_cast<Value>(i / n), static_cast<Value>(i % n)});
    Relation q(n, 2, ts);
    if (!check_generalised_min_closed(q, nu)) candidates.push_back(q);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Relation& x, const Relation& y) { return x.size() < y.size(); });
  const auto gamma = lang.relations();
  for (const auto& q : candidates) {
    FindOptions opts;
    opts.max_arity = std::max(kDefaultMaxArity, q.size());
    if (pp_definable(gamma, q, opts).definable) return q;
  }
  return std::nullopt;
}

Gadget pp_gadget(const Language& lang, const Relation& r) {
  if (r.empty()) throw ContractError("pp gadget for the empty relation");
  Layered g;
  if (lang.has_relation(r)) {
    g = from_relation(lang, r);
  } else {
    FindOptions opts;
    opts.max_arity = std::max(kDefaultMaxArity, r.size());
    if (!pp_definable(lang.relations(), r, opts).definable)
      throw ContractError("relation is not pp-definable from the language");
    g = pp_base(lang, r);
  }
  return {g.inst, g.out, g.rel};
}

GammaExtraction extract_gamma(const Language& lang, const Relation& r) {
  require_minsol(lang);
  GammaExtraction out;
  auto [index, g] = extract_layered(lang, r, out.trace);
  out.index = index;
  out.gadget = materialize(g, lang.valuation(0), 0);
  if (!check_gadget(lang, out.gadget))
    throw std::logic_error("gamma gadget does not evaluate to gamma_" + std::to_string(index));
  return out;
}

ConstantsExtraction extract_constants(const Language& lang) {
  require_minsol(lang);
  if (find_shrinking_map(lang)) throw ContractError("language is not a min-core");
  if (is_gmc(lang)) throw ContractError("language is of type GMC");
  const Valuation& nu = lang.valuation(0);
  const auto order = nu.order();
  ConstantsExtraction out;
  std::vector<std::optional<Layered>> found(3);

  Layered lowest;
  lowest.out = {lowest.inst.add_variable("x")};
  lowest.rel = Relation::unary(3, ValueSet{0b111});
  found[order[0]] = minimize(lowest, nu, {Rational(1)});
  out.trace.push_back(label(lang, order[0]) + " is the argmin of nu");

  auto start = find_non_min_closed(lang);
  if (!start) throw std::logic_error("every small relation of the pp-closure is generalised min-closed");
  std::vector<std::string> gtrace;
  auto [index, gamma] = extract_layered(lang, *start, gtrace);
  out.gamma.index = index;
  out.gamma.trace = gtrace;
  out.gamma.gadget = materialize(gamma, nu, 0);
  out.trace.push_back("gamma_" + std::to_string(index) + " from " + to_string(*start, lang.domain()));
  for (std::size_t j = 0; j < 2; ++j) {
    std::vector<Rational> w(2, Rational(0));
    w[j] = 1;
    Layered h = minimize(gamma, nu, w);
    for (std::size_t p = 0; p < 2; ++p) {
      Layered c = project_out(h, {p});
      if (c.rel.size() != 1) continue;
      Value v = c.rel.tuples()[0][0];
      if (found[v]) continue;
      found[v] = c;
      out.trace.push_back(label(lang, v) + " from coordinate " + std::to_string(p + 1) +
                          " with coordinate " + std::to_string(j + 1) + " minimised");
    }
  }

  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t rank = 1; rank < 3; ++rank) {
      Value m = order[rank];
      if (found[m]) continue;
      bool others = true;
      for (Value v = 0; v < 3; ++v) others = others && (v == m || found[v]);
      if (!others) continue;
      Layered g;
      Variable x = g.inst.add_variable("x");
      std::vector<std::optional<Variable>> const_var(3);
      for (Value v = 0; v < 3; ++v) {
        if (v == m) continue;
        auto map = merge(g, *found[v], label(lang, v) + ".");
        const_var[v] = map[found[v]->out[0]];
      }
      for (std::size_t lower = 0; lower < rank; ++lower) {
        Value u = order[lower];
        std::vector<Value> table{0, 1, 2};
        table[m] = u;
        Operation f(3, 1, table);
        bool witnessed = false;
        for (const auto& nr : lang.named_relations()) {
          for (const Tuple& t : nr.relation.tuples()) {
            Tuple ft(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) ft[i] = f(t[i]);
            if (nr.relation.contains(ft)) continue;
            std::vector<Variable> scope;
            for (Value ti : t) scope.push_back(ti == m ? x : *const_var[ti]);
            g.inst.add_constraint(scope, nr.relation, nr.name);
            out.trace.push_back(label(lang, m) + " -> " + label(lang, u) + " breaks " + nr.name +
                                " at " + to_string(Relation(3, t.size(), {t}), lang.domain()));
            witnessed = true;
            break;
          }
          if (witnessed) break;
        }
        if (!witnessed) throw std::logic_error("min-core has a decreasing unary polymorphism");
      }
      g.layers.push_back({{x, Rational(1)}});
      g.out = {x};
      g.rel = Relation::unary(3, bit(m));
      found[m] = g;
    }

  for (Value v = 0; v < 3; ++v) {
    if (!found[v]) throw std::logic_error("constant " + label(lang, v) + " not reached");
    Gadget gd = materialize(*found[v], nu, 0);
    if (gd.relation != Relation::unary(3, bit(v)) || !check_gadget(lang, gd))
      throw std::logic_error("constant gadget for " + label(lang, v) + " does not evaluate");
    out.constants.push_back(std::move(gd));
  }
  return out;
}

}  // namespace vcsp
