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

#include <optional>
#include <vector>

#include "vcsp/brute_force.hpp"
#include "vcsp/fpol.hpp"
#include "vcsp/io.hpp"
#include "vcsp/types.hpp"

namespace vcsp {

struct EliminationStep {
  Variable variable = 0;
  Value a = 0, b = 0;  // b leaves D_v
  /// Index into the witness eliminations; unset when the fpol was computed
  /// for this step.
  std::optional<std::size_t> elimination;
  FractionalPolymorphism fpol;
  ValueSet before = 0, after = 0;
  /// after is a pp-definable subset of the witness. Always true unless
  /// finite restrictions were added.
  bool definable = false;
};

struct ReductionTrace {
  std::vector<ValueSet> initial_domains;
  /// Unary constraints (v, D_v meet D_nu) for every positive weight w(v,nu).
  std::vector<std::pair<Variable, ValueSet>> finite_restrictions;
  std::vector<EliminationStep> steps;
  std::vector<ValueSet> final_domains;
  std::size_t bound = 0;  // |D| * |V|
  bool complete = true;   // no final domain holds a pair of A
  Operation f1, f2, g;    // f1[f1, conj f1], f2[f2, conj f2] and g'
};

struct GwtpSolveResult {
  SolveResult result;
  ReductionTrace trace;
  MinHomInstance reduced;  // the instance with the added unary constraints
};

/// The normalised operations of the witness.
Operation normalize_pair_operation(const Operation& f);
Operation normalize_arithmetical(const Operation& m, const Operation& f1n);

/// Table checks of every property claimed for the normalised operations.
ValidationReport validate_normalized_operations(const GwtpWitness& w);

/// Pins weighted variables to finite values when some solution has finite
/// measure, eliminates values with dominating fpols until no reduced
/// domain holds a pair of A, then solves exactly. The caller is
/// responsible for the CSP being tractable; the final solve is exact
/// either way. ContractError
/// when the witness does not validate or the instance uses relations
/// outside the language.
GwtpSolveResult gwtp_solve(const Language& lang, const GwtpWitness& w, const MinHomInstance& inst,
                           const SearchOptions& search = {});

Json trace_to_json(const ReductionTrace& t, const MinHomInstance& inst, const Domain& domain);

}  // namespace vcsp
