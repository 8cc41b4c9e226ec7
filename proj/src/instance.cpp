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

#include "vcsp/instance.hpp"

#include <algorithm>

#include "vcsp/errors.hpp"

namespace vcsp {

MinHomInstance::MinHomInstance(std::size_t num_variables) {
  for (std::size_t i = 0; i < num_variables; ++i) add_variable();
}

MinHomInstance::MinHomInstance(std::vector<std::string> names) {
  for (auto& n : names) add_variable(std::move(n));
}

Variable MinHomInstance::add_variable(std::string name) {
  if (name.empty()) name = "v" + std::to_string(names_.size());
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw ContractError("duplicate variable '" + name + "'");
  names_.push_back(std::move(name));
  return names_.size() - 1;
}

Variable MinHomInstance::variable(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw ContractError("unknown variable '" + name + "'");
  return static_cast<Variable>(it - names_.begin());
}

void MinHomInstance::add_constraint(std::vector<Variable> scope, Relation r,
                                    std::string relation_name) {
  if (scope.size() != r.arity())
    throw ContractError("scope length " + std::to_string(scope.size()) +
                        " differs from relation arity " +
                        std::to_string(r.arity()));
  for (Variable v : scope)
    if (v >= names_.size()) throw ContractError("constraint on unknown variable");
  constraints_.push_back({std::move(scope), std::move(r), std::move(relation_name)});
}

void MinHomInstance::add_weight(Variable v, std::size_t valuation, Rational w) {
  if (v >= names_.size()) throw ContractError("weight on unknown variable");
  if (sgn(w) < 0) throw ContractError("weights must be nonnegative");
  weights_.push_back({v, valuation, std::move(w)});
}

bool MinHomInstance::allowed_by(const Language& lang) const {
  try {
    check(lang);
  } catch (const ContractError&) {
    return false;
  }
  return true;
}

void MinHomInstance::check(const Language& lang, bool require_gamma) const {
  for (const auto& c : constraints_) {
    if (c.relation.domain_size() != lang.domain_size())
      throw ContractError("constraint relation over a different domain");
    if (require_gamma && !lang.has_relation(c.relation))
      throw ContractError("constraint relation '" + c.relation_name +
                          "' is not in the language");
  }
  for (const auto& w : weights_)
    if (w.valuation >= lang.named_valuations().size())
      throw ContractError("weight references unknown valuation");
}

bool satisfies(const MinHomInstance& inst, const Assignment& phi) {
  if (phi.size() != inst.num_variables()) return false;
  Tuple t;
  for (const auto& c : inst.constraints()) {
    t.clear();
    for (Variable v : c.scope) t.push_back(phi[v]);
    if (!c.relation.contains(t)) return false;
  }
  return true;
}

ExtRational measure(const Language& lang, const MinHomInstance& inst,
                    const Assignment& phi) {
  if (phi.size() != inst.num_variables())
    throw ContractError("assignment is not total on the variables");
  ExtRational total(0);
  for (const auto& w : inst.weights()) {
    if (w.valuation >= lang.named_valuations().size())
      throw ContractError("weight references unknown valuation");
    total += ExtRational(w.value) * lang.valuation(w.valuation)(phi[w.variable]);
  }
  return total;
}

std::vector<std::vector<ExtRational>> unary_costs(const Language& lang,
                                                  const MinHomInstance& inst) {
  std::size_t n = lang.domain_size();
  std::vector<std::vector<ExtRational>> cost(
      inst.num_variables(), std::vector<ExtRational>(n, ExtRational(0)));
  for (const auto& w : inst.weights()) {
    if (w.valuation >= lang.named_valuations().size())
      throw ContractError("weight references unknown valuation");
    const auto& nu = lang.valuation(w.valuation);
    for (Value x = 0; x < n; ++x)
      cost[w.variable][x] += ExtRational(w.value) * nu(x);
  }
  return cost;
}

std::string to_string(const Assignment& phi, const Domain& domain) {
  std::string s = "(";
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ",";
    s += domain.label(phi[i]);
  }
  return s + ")";
}

}  // namespace vcsp
