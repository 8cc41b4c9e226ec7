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

#include "vcsp/csp.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "vcsp/errors.hpp"

namespace vcsp {

CspModel::CspModel(std::size_t num_variables, std::size_t domain_size)
    : domain_size_(domain_size),
      domains_(num_variables, full_set(domain_size)) {
  if (domain_size == 0 || domain_size > 32)
    throw ContractError("unsupported CSP domain size");
}

Variable CspModel::add_variable(ValueSet domain) {
  domains_.push_back(domain & full_set(domain_size_));
  return domains_.size() - 1;
}

void CspModel::add_table(std::vector<Variable> scope, TupleList tuples) {
  for (Variable v : scope)
    if (v >= domains_.size()) throw ContractError("table on unknown variable");
  for (const auto& t : *tuples)
    if (t.size() != scope.size())
      throw ContractError("table tuple length differs from scope");
  constraints_.push_back({std::move(scope), std::move(tuples)});
}

TupleList share_tuples(const Relation& r) {
  return std::make_shared<const std::vector<Tuple>>(r.tuples());
}

void CspModel::add_relation(std::vector<Variable> scope, const Relation& r) {
  if (scope.size() != r.arity())
    throw ContractError("scope length differs from relation arity");
  add_table(std::move(scope), share_tuples(r));
}

void CspModel::add_equal(Variable x, Variable y) {
  if (x == y) return;
  std::vector<Tuple> eq;
  for (Value v = 0; v < domain_size_; ++v) eq.push_back({v, v});
  add_table({x, y}, std::make_shared<const std::vector<Tuple>>(std::move(eq)));
}

CspModel model_from_instance(const MinHomInstance& inst, std::size_t domain_size) {
  CspModel m(inst.num_variables(), domain_size);
  for (const auto& c : inst.constraints()) {
    if (c.relation.domain_size() != domain_size)
      throw ContractError("constraint over a different domain");
    m.add_relation(c.scope, c.relation);
  }
  return m;
}

namespace {

struct Prepared {
  explicit Prepared(const CspModel& m) : model(m), watch(m.num_variables()) {
    const auto& cs = m.constraints();
    repeats.resize(cs.size());
    distinct.resize(cs.size());
    for (std::size_t c = 0; c < cs.size(); ++c) {
      const auto& s = cs[c].scope;
      for (std::size_t i = 0; i < s.size(); ++i) {
        bool first = true;
        for (std::size_t j = 0; j < i; ++j)
          if (s[j] == s[i]) {
            if (first) repeats[c].push_back({j, i});
            first = false;
          }
        if (first) distinct[c].push_back(i);
      }
      for (std::size_t i : distinct[c]) watch[s[i]].push_back(c);
    }
  }

  // Revises constraint c; returns false on wipe-out, appends changed vars.
  bool revise(std::size_t c, std::vector<ValueSet>& dom,
              std::vector<Variable>& changed) const {
    const auto& con = model.constraints()[c];
    const auto& s = con.scope;
    std::size_t k = s.size();
    ValueSet support[64] = {};
    bool any = false;
    for (const auto& t : *con.tuples) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = has(dom[s[i]], t[i]);
      for (auto [i, j] : repeats[c])
        if (ok && t[i] != t[j]) ok = false;
      if (!ok) continue;
      any = true;
      for (std::size_t i = 0; i < k; ++i) support[i] |= bit(t[i]);
    }
    if (!any) return false;
    for (std::size_t i : distinct[c]) {
      ValueSet nd = dom[s[i]] & support[i];
      if (nd != dom[s[i]]) {
        dom[s[i]] = nd;
        changed.push_back(s[i]);
      }
    }
    return true;
  }

  bool propagate(std::vector<ValueSet>& dom,
                 const std::vector<Variable>* seeds) const {
    for (ValueSet d : dom)
      if (d == 0) return false;
    std::size_t nc = model.constraints().size();
    std::vector<char> queued(nc, 0);
    std::deque<std::size_t> queue;
    auto push = [&](std::size_t c) {
      if (!queued[c]) {
        queued[c] = 1;
        queue.push_back(c);
      }
    };
    if (seeds == nullptr) {
      for (std::size_t c = 0; c < nc; ++c) push(c);
    } else {
      for (Variable v : *seeds)
        for (std::size_t c : watch[v]) push(c);
    }
    std::vector<Variable> changed;
    while (!queue.empty()) {
      std::size_t c = queue.front();
      queue.pop_front();
      queued[c] = 0;
      changed.clear();
      if (!revise(c, dom, changed)) return false;
      for (Variable v : changed) {
        if (dom[v] == 0) return false;
        for (std::size_t c2 : watch[v])
          if (c2 != c) push(c2);
      }
    }
    return true;
  }

  const CspModel& model;
  std::vector<std::vector<std::size_t>> watch;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> repeats;
  std::vector<std::vector<std::size_t>> distinct;
};

void check_arity(const CspModel& m) {
  for (const auto& c : m.constraints())
    if (c.scope.size() > 64) throw ContractError("constraint arity above 64");
}

std::optional<Variable> pick(const std::vector<ValueSet>& dom, VarOrder order) {
  std::optional<Variable> best;
  int best_size = 0;
  for (Variable v = 0; v < dom.size(); ++v) {
    int s = popcount(dom[v]);
    if (s <= 1) continue;
    if (order == VarOrder::kLexicographic) return v;
    if (!best || s < best_size) {
      best = v;
      best_size = s;
    }
  }
  return best;
}

Assignment to_assignment(const std::vector<ValueSet>& dom) {
  Assignment a(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i)
    a[i] = static_cast<Value>(std::countr_zero(dom[i]));
  return a;
}

class Enumerator {
 public:
  Enumerator(const CspModel& m, const SearchOptions& o) : prep_(m), opts_(o) {
    check_arity(m);
  }

  // Visits solutions in order until `visit` returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    auto dom = prep_.model.domains();
    if (!prep_.propagate(dom, nullptr)) return;
    dfs(dom, visit);
  }

 private:
  template <typename Visit>
  bool dfs(std::vector<ValueSet>& dom, Visit& visit) {
    if (++nodes_ > opts_.max_nodes)
      throw ResourceError("CSP search exceeded " + std::to_string(opts_.max_nodes) +
                          " nodes");
    auto v = pick(dom, opts_.order);
    if (!v) return visit(to_assignment(dom));
    for (Value x : members(dom[*v])) {
      auto child = dom;
      child[*v] = bit(x);
      std::vector<Variable> seeds{*v};
      if (!prep_.propagate(child, &seeds)) continue;
      if (!dfs(child, visit)) return false;
    }
    return true;
  }

  Prepared prep_;
  SearchOptions opts_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool propagate(const CspModel& model, std::vector<ValueSet>& domains) {
  check_arity(model);
  Prepared p(model);
  return p.propagate(domains, nullptr);
}

std::optional<Assignment> solve_any(const CspModel& model,
                                    const SearchOptions& opts) {
  std::optional<Assignment> out;
  Enumerator e(model, opts);
  e.run([&](Assignment a) {
    out = std::move(a);
    return false;
  });
  return out;
}

AllSolutions solve_all(const CspModel& model, std::size_t limit,
                       const SearchOptions& opts) {
  AllSolutions out;
  SearchOptions o = opts;
  o.order = VarOrder::kLexicographic;
  Enumerator e(model, o);
  e.run([&](Assignment a) {
    if (out.solutions.size() >= limit) {
      out.truncated = true;
      return false;
    }
    out.solutions.push_back(std::move(a));
    return true;
  });
  return out;
}

std::vector<ValueSet> per_variable_values(const CspModel& model,
                                          const SearchOptions& opts) {
  std::size_t n = model.num_variables();
  std::vector<ValueSet> seen(n, 0);
  auto first = solve_any(model, opts);
  if (!first) return seen;
  auto record = [&](const Assignment& a) {
    for (std::size_t i = 0; i < n; ++i) seen[i] |= bit(a[i]);
  };
  record(*first);
  auto base = model.domains();
  Prepared prep(model);
  if (!prep.propagate(base, nullptr)) return std::vector<ValueSet>(n, 0);
  for (Variable v = 0; v < n; ++v) {
    for (Value x : members(base[v])) {
      if (has(seen[v], x)) continue;
      CspModel pinned = model;
      pinned.restrict(v, bit(x));
      if (auto a = solve_any(pinned, opts)) record(*a);
    }
  }
  return seen;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const CspModel& m, const std::vector<std::vector<ExtRational>>& cost,
                 std::size_t max_solutions, const SearchOptions& o)
      : prep_(m), cost_(cost), max_solutions_(max_solutions), opts_(o) {
    check_arity(m);
    if (cost.size() != m.num_variables())
      throw ContractError("cost table size differs from variable count");
  }

  OptimizeResult run() {
    auto dom = prep_.model.domains();
    if (prep_.propagate(dom, nullptr)) dfs(dom);
    if (!result_.satisfiable) result_.optimal.clear();
    return std::move(result_);
  }

 private:
  ExtRational bound(const std::vector<ValueSet>& dom) const {
    ExtRational lb(0);
    for (Variable v = 0; v < dom.size(); ++v) {
      std::optional<ExtRational> m;
      for (Value x : members(dom[v]))
        if (!m || cost_[v][x] < *m) m = cost_[v][x];
      lb += *m;
    }
    return lb;
  }

  void dfs(std::vector<ValueSet>& dom) {
    if (++nodes_ > opts_.max_nodes)
      throw ResourceError("optimisation exceeded " + std::to_string(opts_.max_nodes) +
                          " nodes");
    ExtRational lb = bound(dom);
    if (result_.satisfiable) {
      if (lb > result_.optimum) return;
      bool full = result_.optimal.size() >= max_solutions_;
      if (lb == result_.optimum && full &&
          (max_solutions_ == 1 || result_.truncated))
        return;
    }
    auto v = pick(dom, opts_.order);
    if (!v) {
      Assignment a = to_assignment(dom);
      if (!result_.satisfiable || lb < result_.optimum) {
        result_.satisfiable = true;
        result_.optimum = lb;
        result_.optimal.clear();
        result_.truncated = false;
      }
      if (result_.optimal.size() < max_solutions_)
        result_.optimal.push_back(std::move(a));
      else
        result_.truncated = true;
      return;
    }
    std::vector<Value> vals = members(dom[*v]);
    std::stable_sort(vals.begin(), vals.end(), [&](Value x, Value y) {
      return cost_[*v][x] < cost_[*v][y];
    });
    for (Value x : vals) {
      auto child = dom;
      child[*v] = bit(x);
      std::vector<Variable> seeds{*v};
      if (!prep_.propagate(child, &seeds)) continue;
      dfs(child);
    }
  }

  Prepared prep_;
  const std::vector<std::vector<ExtRational>>& cost_;
  std::size_t max_solutions_;
  SearchOptions opts_;
  std::uint64_t nodes_ = 0;
  OptimizeResult result_;
};

}  // namespace

OptimizeResult optimize(const CspModel& model,
                        const std::vector<std::vector<ExtRational>>& cost,
                        std::size_t max_solutions, const SearchOptions& opts) {
  BranchAndBound bb(model, cost, std::max<std::size_t>(max_solutions, 1), opts);
  auto r = bb.run();
  std::sort(r.optimal.begin(), r.optimal.end());
  return r;
}

CspSolveResult csp_solve(const Language& lang, const MinHomInstance& inst,
                         CspMode mode, std::size_t limit,
                         const SearchOptions& opts) {
  CspModel m = model_from_instance(inst, lang.domain_size());
  CspSolveResult out;
  switch (mode) {
    case CspMode::kAnySolution:
      if (auto a = solve_any(m, opts)) {
        out.satisfiable = true;
        out.solutions.push_back(std::move(*a));
      }
      break;
    case CspMode::kAllSolutions: {
      auto all = solve_all(m, limit, opts);
      out.satisfiable = !all.solutions.empty();
      out.solutions = std::move(all.solutions);
      out.truncated = all.truncated;
      break;
    }
    case CspMode::kPerVariableValues:
      out.values = per_variable_values(m, opts);
      out.satisfiable =
          inst.num_variables() == 0 ? solve_any(m, opts).has_value()
                                    : out.values.front() != 0;
      break;
  }
  return out;
}

}  // namespace vcsp

namespace vcsp {

Valuation expressed_valuation(const Language& lang, const MinHomInstance& inst,
                              Variable v, const SearchOptions& opts) {
  inst.check(lang, false);
  if (v >= inst.num_variables()) throw ContractError("variable out of range");
  CspModel m = model_from_instance(inst, lang.domain_size());
  auto cost = unary_costs(lang, inst);
  std::vector<ExtRational> out;
  for (Value x = 0; x < lang.domain_size(); ++x) {
    CspModel pinned = m;
    pinned.restrict(v, bit(x));
    auto r = optimize(pinned, cost, 1, opts);
    out.push_back(r.satisfiable ? r.optimum : ExtRational::infinity());
  }
  return Valuation(std::move(out));
}

Relation optimal_projection(const Language& lang, const MinHomInstance& inst,
                            const std::vector<Variable>& vars, const SearchOptions& opts) {
  inst.check(lang, false);
  const std::size_t n = lang.domain_size();
  for (Variable v : vars)
    if (v >= inst.num_variables()) throw ContractError("variable out of range");
  if (vars.empty()) throw ContractError("empty projection");
  CspModel m = model_from_instance(inst, n);
  auto cost = unary_costs(lang, inst);
  std::optional<ExtRational> best;
  std::vector<std::pair<Tuple, ExtRational>> found;
  const Relation all = Relation::full(n, vars.size());
  for (const Tuple& t : all.tuples()) {
    CspModel pinned = m;
    for (std::size_t i = 0; i < vars.size(); ++i) pinned.restrict(vars[i], bit(t[i]));
    auto r = optimize(pinned, cost, 1, opts);
    if (!r.satisfiable) continue;
    if (!best || r.optimum < *best) best = r.optimum;
    found.emplace_back(t, r.optimum);
  }
  if (!best) throw ContractError("instance has no solution");
  std::vector<Tuple> ts;
  for (auto& [t, c] : found)
    if (c == *best) ts.push_back(std::move(t));
  return Relation(n, vars.size(), std::move(ts));
}

}  // namespace vcsp
