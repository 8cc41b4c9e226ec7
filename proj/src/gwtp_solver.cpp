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

#include "vcsp/gwtp_solver.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "vcsp/csp.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/fpol.hpp"

namespace vcsp {

Operation normalize_pair_operation(const Operation& f) {
  return superpose(f, f, conjugate(f));
}

Operation normalize_arithmetical(const Operation& m, const Operation& f) {
  const std::size_t n = m.domain_size();
  return Operation::from_function(n, 3, [&](std::span<const Value> t) {
    Value x = t[0], y = t[1], z = t[2];
    return m(f(x, f(y, z)), f(y, f(x, z)), f(z, f(x, y)));
  });
}

ValidationReport validate_normalized_operations(const GwtpWitness& w) {
  ValidationReport r;
  const std::size_t n = w.f1.domain_size();
  const Operation f1 = normalize_pair_operation(w.f1), f2 = normalize_pair_operation(w.f2);
  const Operation g = normalize_arithmetical(w.m, f1);
  auto in = [](const std::vector<Pair>& v, Pair p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  auto name = [](Pair p) {
    return "{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
  };
  for (Pair p : all_pairs(n)) {
    auto [x, y] = p;
    if (!in(w.B, p)) {
      if (f1.projection_on(x, y) != 1) r.fail("f1' is not pr1 on " + name(p));
      if (f2.projection_on(x, y) != 1) r.fail("f2' is not pr1 on " + name(p));
      if (!g.arithmetical_on(x, y)) r.fail("g' is not arithmetical on " + name(p));
    } else if (!in(w.A, p)) {
      for (const Operation* f : {&f1, &f2})
        if (!f->idempotent_on(x, y) || !f->conservative_on(x, y) || !f->commutative_on(x, y))
          r.fail(std::string(f == &f1 ? "f1'" : "f2'") +
                 " is not idempotent, conservative and commutative on " + name(p));
      if (f1(x, y) == f2(x, y)) r.fail("f1' and f2' agree on " + name(p));
    }
    if (!in(w.A, p)) {
      for (Value u : {x, y})
        for (Value v : {x, y})
          for (Value s : {x, y}) {
            Value o = g(u, v, s);
            if (o != x && o != y) r.fail("g' is not conservative on " + name(p));
          }
    }
  }
  return r;
}

GwtpSolveResult gwtp_solve(const Language& lang, const GwtpWitness& w, const MinHomInstance& inst,
                           const SearchOptions& search) {
  auto report = validate_witness(lang, w);
  if (!report.ok()) throw ContractError("witness does not validate: " + report.violations.front());
  inst.check(lang);
  const std::size_t n = lang.domain_size(), nv = inst.num_variables();
  GwtpSolveResult out;
  out.reduced = inst;
  out.trace.bound = n * nv;
  out.trace.f1 = normalize_pair_operation(w.f1);
  out.trace.f2 = normalize_pair_operation(w.f2);
  out.trace.g = normalize_arithmetical(w.m, out.trace.f1);

  auto domains = [&]() {
    return csp_solve(lang, out.reduced, CspMode::kPerVariableValues, 1, search).values;
  };
  auto empty = [](const std::vector<ValueSet>& d) {
    return std::any_of(d.begin(), d.end(), [](ValueSet s) { return s == 0; });
  };
  std::vector<ValueSet> dv = domains();
  out.trace.initial_domains = dv;
  if (empty(dv)) {
    out.trace.final_domains = dv;
    return out;
  }

  // A positive weight on nu pins the variable to D_nu, so that every
  // remaining solution has finite measure.
  std::vector<ValueSet> finite(nv, full_set(n));
  for (const auto& wt : inst.weights())
    if (wt.value > Rational(0)) finite[wt.variable] &= lang.valuation(wt.valuation).finite_part();
  for (Variable v = 0; v < nv; ++v)
    if ((dv[v] & ~finite[v]) != 0) {
      out.reduced.add_constraint({v}, Relation::unary(n, dv[v] & finite[v]), {});
      out.trace.finite_restrictions.push_back({v, dv[v] & finite[v]});
    }
  dv = domains();
  if (empty(dv)) {
    // Every solution has infinite measure.
    out.reduced = inst;
    out.trace.final_domains = out.trace.initial_domains;
    auto any = csp_solve(lang, inst, CspMode::kAnySolution, 1, search);
    out.result.satisfiable = true;
    out.result.optimum = ExtRational::infinity();
    out.result.optimal_assignments = any.solutions;
    out.result.truncated = true;
    return out;
  }

  auto holds_pair = [&](ValueSet d) {
    return std::any_of(w.A.begin(), w.A.end(),
                       [&](Pair p) { return has(d, p.first) && has(d, p.second); });
  };
  // The listed elimination for D_v, else any stored one inside D_v, else
  // a dominating fpol computed for an A pair inside D_v.
  auto choose = [&](ValueSet d) -> std::optional<EliminationStep> {
    EliminationStep s;
    s.before = d;
    for (const auto& sub : w.subsets)
      if (sub.subset == d && sub.elimination) {
        s.elimination = *sub.elimination;
        s.fpol = w.eliminations[*sub.elimination].fpol;
        s.a = w.eliminations[*sub.elimination].a;
        s.b = w.eliminations[*sub.elimination].b;
        return s;
      }
    for (std::size_t i = 0; i < w.eliminations.size(); ++i) {
      const auto& el = w.eliminations[i];
      if (has(d, el.a) && has(d, el.b)) {
        s.elimination = i;
        s.fpol = el.fpol;
        s.a = el.a;
        s.b = el.b;
        return s;
      }
    }
    for (auto [x, y] : w.A) {
      if (!has(d, x) || !has(d, y)) continue;
      for (auto [a, b] : {Pair(x, y), Pair(y, x)}) {
        auto q = exists_dominating_fpol(lang, a, b);
        if (q.fpol) {
          s.fpol = *q.fpol;
          s.a = a;
          s.b = b;
          return s;
        }
      }
    }
    return std::nullopt;
  };

  for (;;) {
    std::optional<EliminationStep> step;
    for (Variable v = 0; v < nv && !step; ++v)
      if (holds_pair(dv[v]) && (step = choose(dv[v]))) step->variable = v;
    if (!step) break;
    if (out.trace.steps.size() >= out.trace.bound)
      throw std::logic_error("elimination exceeded |D| * |V| iterations");
    step->after = step->before & ~bit(step->b);
    step->definable = std::any_of(w.subsets.begin(), w.subsets.end(),
                                  [&](const SubsetElimination& u) { return u.subset == step->after; });
    if (!step->definable && out.trace.finite_restrictions.empty())
      throw std::logic_error("D_v without b is not pp-definable");
    out.reduced.add_constraint({step->variable}, Relation::unary(n, step->after), {});
    out.trace.steps.push_back(*step);
    dv = domains();
    if (empty(dv)) throw std::logic_error("elimination made the instance unsatisfiable");
  }
  out.trace.final_domains = dv;
  out.trace.complete = std::none_of(dv.begin(), dv.end(), holds_pair);

  auto opt = optimize(model_from_instance(out.reduced, n), unary_costs(lang, out.reduced), 1, search);
  out.result.satisfiable = opt.satisfiable;
  out.result.optimum = opt.optimum;
  out.result.optimal_assignments = opt.optimal;
  out.result.truncated = opt.truncated;
  return out;
}

Json trace_to_json(const ReductionTrace& t, const MinHomInstance& inst, const Domain& domain) {
  auto set = [&](ValueSet s) {
    Json j = Json::array();
    for (Value v : members(s)) j.push_back(domain.label(v));
    return j;
  };
  auto op = [&](const Operation& f) {
    Json j = Json::array();
    for (Value v : f.table()) j.push_back(domain.label(v));
    return j;
  };
  Json j;
  Json init = Json::object(), fin = Json::object();
  for (Variable v = 0; v < inst.num_variables(); ++v) {
    if (v < t.initial_domains.size()) init[inst.name(v)] = set(t.initial_domains[v]);
    if (v < t.final_domains.size()) fin[inst.name(v)] = set(t.final_domains[v]);
  }
  j["initial_domains"] = init;
  Json steps = Json::array();
  for (const auto& s : t.steps)
    steps.push_back(Json{{"variable", inst.name(s.variable)},
                         {"pair", Json::array({domain.label(s.a), domain.label(s.b)})},
                         {"removed", domain.label(s.b)},
                         {"elimination", s.elimination ? Json(*s.elimination) : Json()},
                         {"constraint", set(s.after)},
                         {"pp_definable", s.definable}});
  j["steps"] = steps;
  Json pins = Json::array();
  for (auto [v, d] : t.finite_restrictions)
    pins.push_back(Json{{"variable", inst.name(v)}, {"constraint", set(d)}});
  j["finite_restrictions"] = pins;
  j["complete"] = t.complete;
  j["final_domains"] = fin;
  j["bound"] = t.bound;
  j["f1_normalized"] = op(t.f1);
  j["f2_normalized"] = op(t.f2);
  j["g_normalized"] = op(t.g);
  return j;
}

}  // namespace vcsp
