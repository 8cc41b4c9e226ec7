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

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "vcsp/instance.hpp"

namespace vcsp {

using TupleList = std::shared_ptr<const std::vector<Tuple>>;

struct TableConstraint {
  std::vector<Variable> scope;
  TupleList tuples;
};

/// Finite-domain CSP with positive table constraints. Scopes may repeat a
/// variable.
class CspModel {
 public:
  CspModel(std::size_t num_variables, std::size_t domain_size);

  std::size_t num_variables() const { return domains_.size(); }
  std::size_t domain_size() const { return domain_size_; }
  const std::vector<ValueSet>& domains() const { return domains_; }
  const std::vector<TableConstraint>& constraints() const { return constraints_; }

  Variable add_variable(ValueSet domain);
  void restrict(Variable v, ValueSet allowed) { domains_.at(v) &= allowed; }
  void add_table(std::vector<Variable> scope, TupleList tuples);
  void add_relation(std::vector<Variable> scope, const Relation& r);
  void add_equal(Variable x, Variable y);

 private:
  std::size_t domain_size_;
  std::vector<ValueSet> domains_;
  std::vector<TableConstraint> constraints_;
};

TupleList share_tuples(const Relation& r);

CspModel model_from_instance(const MinHomInstance& inst, std::size_t domain_size);

enum class VarOrder { kLexicographic, kSmallestDomain };

struct SearchOptions {
  std::uint64_t max_nodes = 200'000'000;
  VarOrder order = VarOrder::kLexicographic;
};

/// Generalised arc consistency on `domains`. False on a wipe-out.
bool propagate(const CspModel& model, std::vector<ValueSet>& domains);

/// With kLexicographic order the returned solution is the
/// lexicographically least one. Throws ResourceError past max_nodes.
std::optional<Assignment> solve_any(const CspModel& model,
                                    const SearchOptions& opts = {});

struct AllSolutions {
  std::vector<Assignment> solutions;
  bool truncated = false;
};

/// Solutions in lexicographic order, at most `limit` of them.
AllSolutions solve_all(const CspModel& model, std::size_t limit,
                       const SearchOptions& opts = {});

/// {phi(v) : phi a solution} per variable; all empty when unsatisfiable.
std::vector<ValueSet> per_variable_values(const CspModel& model,
                                          const SearchOptions& opts = {});

struct OptimizeResult {
  bool satisfiable = false;
  ExtRational optimum;
  std::vector<Assignment> optimal;  // lexicographic order
  bool truncated = false;
};

/// Minimises sum_v cost[v][phi(v)] by depth-first branch and bound with
/// GAC. Collects up to `max_solutions` optimal assignments.
OptimizeResult optimize(const CspModel& model,
                        const std::vector<std::vector<ExtRational>>& cost,
                        std::size_t max_solutions = 1,
                        const SearchOptions& opts = {});

enum class CspMode { kAnySolution, kAllSolutions, kPerVariableValues };

struct CspSolveResult {
  bool satisfiable = false;
  std::vector<Assignment> solutions;
  bool truncated = false;
  std::vector<ValueSet> values;
};

/// CSP view of a MinHom instance (weights ignored).
CspSolveResult csp_solve(const Language& lang, const MinHomInstance& inst,
                         CspMode mode, std::size_t limit = 1'000'000,
                         const SearchOptions& opts = {});

/// nu(x) = min{m(phi) : phi in sol(I), phi(v) = x}, infinity when no
/// solution has phi(v) = x. Branch and bound per value.
Valuation expressed_valuation(const Language& lang, const MinHomInstance& inst,
                              Variable v, const SearchOptions& opts = {});

/// {(phi(v_1), ..., phi(v_k)) : phi in optsol(I)} by one pinned
/// optimisation per candidate tuple. ContractError when I is unsatisfiable.
Relation optimal_projection(const Language& lang, const MinHomInstance& inst,
                            const std::vector<Variable>& vars,
                            const SearchOptions& opts = {});

}  // namespace vcsp
