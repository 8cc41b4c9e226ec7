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
#include <vector>

#include "vcsp/instance.hpp"

namespace vcsp {

inline constexpr std::uint64_t kDefaultBruteForceBudget = 10'000'000;

struct SolveResult {
  bool satisfiable = false;
  ExtRational optimum;  // meaningful only when satisfiable
  std::vector<Assignment> optimal_assignments;  // lexicographic order
  bool truncated = false;
};

/// Exhaustive chronological backtracking. A constraint is checked once its
/// whole scope is assigned; no propagation. Refuses (ResourceError) when
/// |D|^|V| exceeds `budget`. Keeps at most `max_optimal` optimal
/// assignments, setting `truncated` if more exist.
SolveResult brute_force_minhom(const Language& lang, const MinHomInstance& inst,
                               std::uint64_t budget = kDefaultBruteForceBudget,
                               std::size_t max_optimal = 1'000'000);

/// {(phi(v1),...,phi(vn)) : phi in optsol(I)}. ContractError when the
/// instance is unsatisfiable.
Relation weighted_pp_evaluate(const Language& lang, const MinHomInstance& inst,
                              const std::vector<Variable>& projection,
                              std::uint64_t budget = kDefaultBruteForceBudget);

/// nu(x) = min{m(phi) : phi in sol(I), phi(v) = x}, inf if none.
Valuation expressibility_evaluate(const Language& lang, const MinHomInstance& inst,
                                  Variable v,
                                  std::uint64_t budget = kDefaultBruteForceBudget);

/// The pp-defined relation {(phi(v1),...) : phi in sol(I)}.
Relation pp_evaluate(const Language& lang, const MinHomInstance& inst,
                     const std::vector<Variable>& projection,
                     std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace vcsp
