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

#include "vcsp/brute_force.hpp"

#include <algorithm>
#include <set>

#include "vcsp/errors.hpp"

namespace vcsp {

namespace {

void check_budget(std::size_t d, std::size_t n, std::uint64_t budget) {
  long double space = 1;
  for (std::size_t i = 0; i < n; ++i) space *= static_cast<long double>(d);
  if (space > static_cast<long double>(budget))
    throw ResourceError("brute force over " + std::to_string(d) + "^" +
                        std::to_string(n) + " assignments exceeds the budget of " +
                        std::to_string(budget));
}

// Calls visit(phi) for every solution, in lexicographic order.
template <typename Visit>
void for_each_solution(const MinHomInstance& inst, std::size_t d, Visit&& visit) {
  std::size_t n = inst.num_variables();
  // Constraints become checkable once their largest variable is assigned.
  std::vector<std::vector<const Constraint*>> ready(n);
  std::vector<const Constraint*> nullary;
  for (const auto& c : inst.constraints()) {
    if (c.scope.empty()) {
      nullary.push_back(&c);
      continue;
    }
    ready[*std::max_element(c.scope.begin(), c.scope.end())].push_back(&c);
  }
  Assignment phi(n, 0);
  Tuple t;
  auto ok_at = [&](std::size_t i) {
    for (const Constraint* c : ready[i]) {
      t.clear();
      for (Variable v : c->scope) t.push_back(phi[v]);
      if (!c->relation.contains(t)) return false;
    }
    return true;
  };
  if (n == 0) {
    visit(phi);
    return;
  }
  std::size_t i = 0;
  phi[0] = 0;
  while (true) {
    if (ok_at(i)) {
      if (i + 1 == n) {
        visit(phi);
      } else {
        phi[++i] = 0;
        continue;
      }
    }
    while (true) {
      if (++phi[i] < d) break;
      if (i == 0) return;
      --i;
    }
  }
}

}  // namespace

SolveResult brute_force_minhom(const Language& lang, const MinHomInstance& inst,
                               std::uint64_t budget, std::size_t max_optimal) {
  inst.check(lang, false);
  std::size_t d = lang.domain_size();
  check_budget(d, inst.num_variables(), budget);
  SolveResult out;
  for_each_solution(inst, d, [&](const Assignment& phi) {
    ExtRational m = measure(lang, inst, phi);
    if (!out.satisfiable || m < out.optimum) {
      out.satisfiable = true;
      out.optimum = m;
      out.optimal_assignments.clear();
      out.truncated = false;
    }
    if (m == out.optimum) {
      if (out.optimal_assignments.size() < max_optimal)
        out.optimal_assignments.push_back(phi);
      else
        out.truncated = true;
    }
  });
  return out;
}

Relation weighted_pp_evaluate(const Language& lang, const MinHomInstance& inst,
                              const std::vector<Variable>& projection,
                              std::uint64_t budget) {
  auto r = brute_force_minhom(lang, inst, budget, static_cast<std::size_t>(-1));
  if (!r.satisfiable)
    throw ContractError("unsatisfiable instance defines no relation");
  std::vector<Tuple> out;
  for (const auto& phi : r.optimal_assignments) {
    Tuple t;
    for (Variable v : projection) t.push_back(phi.at(v));
    out.push_back(std::move(t));
  }
  if (projection.empty()) throw ContractError("empty projection");
  return Relation(lang.domain_size(), projection.size(), std::move(out));
}

Valuation expressibility_evaluate(const Language& lang, const MinHomInstance& inst,
                                  Variable v, std::uint64_t budget) {
  inst.check(lang, false);
  if (v >= inst.num_variables()) throw ContractError("unknown variable");
  std::size_t d = lang.domain_size();
  check_budget(d, inst.num_variables(), budget);
  std::vector<ExtRational> best(d, ExtRational::infinity());
  for_each_solution(inst, d, [&](const Assignment& phi) {
    ExtRational m = measure(lang, inst, phi);
    if (m < best[phi[v]]) best[phi[v]] = m;
  });
  return Valuation(std::move(best));
}

Relation pp_evaluate(const Language& lang, const MinHomInstance& inst,
                     const std::vector<Variable>& projection, std::uint64_t budget) {
  std::size_t d = lang.domain_size();
  check_budget(d, inst.num_variables(), budget);
  if (projection.empty()) throw ContractError("empty projection");
  std::set<Tuple> out;
  for_each_solution(inst, d, [&](const Assignment& phi) {
    Tuple t;
    for (Variable v : projection) t.push_back(phi.at(v));
    out.insert(std::move(t));
  });
  return Relation(d, projection.size(), std::vector<Tuple>(out.begin(), out.end()));
}

}  // namespace vcsp
