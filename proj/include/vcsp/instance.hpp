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

#pragma once

#include <string>
#include <vector>

#include "vcsp/language.hpp"

namespace vcsp {

using Variable = std::size_t;

struct Constraint {
  std::vector<Variable> scope;
  Relation relation;
  std::string relation_name;  // informational; may be empty
};

struct Weight {
  Variable variable;
  std::size_t valuation;  // index into the language's valuations
  Rational value;
};

/// Instance (V, C, w). Relations are held by value so gadget instances may
/// use relations outside Gamma; `allowed_by` checks Gamma-membership.
class MinHomInstance {
 public:
  MinHomInstance() = default;
  explicit MinHomInstance(std::size_t num_variables);
  MinHomInstance(std::vector<std::string> names);

  std::size_t num_variables() const { return names_.size(); }
  const std::string& name(Variable v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  Variable add_variable(std::string name = {});
  Variable variable(const std::string& name) const;

  void add_constraint(std::vector<Variable> scope, Relation r,
                      std::string relation_name = {});
  void add_weight(Variable v, std::size_t valuation, Rational w);

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Weight>& weights() const { return weights_; }

  /// Every constraint relation is a member of the language's Gamma and
  /// every weight references an existing valuation.
  bool allowed_by(const Language& lang) const;

  /// Throws ContractError naming the first structural problem. Constraint
  /// relations are required to lie in Gamma only when `require_gamma`.
  void check(const Language& lang, bool require_gamma = true) const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
  std::vector<Weight> weights_;
};

using Assignment = std::vector<Value>;

bool satisfies(const MinHomInstance& inst, const Assignment& phi);

/// sum_v sum_nu w(v,nu) nu(phi(v)) with 0*inf = 0. Ignores constraints.
ExtRational measure(const Language& lang, const MinHomInstance& inst,
                    const Assignment& phi);

/// cost[v][x] = sum_nu w(v,nu) nu(x).
std::vector<std::vector<ExtRational>> unary_costs(const Language& lang,
                                                  const MinHomInstance& inst);

std::string to_string(const Assignment& phi, const Domain& domain);

}  // namespace vcsp
