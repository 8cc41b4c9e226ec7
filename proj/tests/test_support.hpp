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
#include <random>
#include <vector>

#include "vcsp/instance.hpp"
#include "vcsp/language.hpp"
#include "vcsp/lp.hpp"

namespace vcsp::testing {

/// Relation from label strings such as {"ac", "ca"} over domain a, b, c.
Relation rel(std::size_t n, std::initializer_list<const char*> tuples);

/// pi(x) for a permutation of D applied to every relation and valuation.
Language permute(const Language& lang, const std::vector<Value>& pi);

Language make_language(std::size_t n, std::vector<Relation> rels,
                       std::vector<Valuation> vals);

Relation h5();

Relation random_relation(std::mt19937_64& rng, std::size_t n, std::size_t arity,
                         double density);

/// Fourier-Motzkin elimination with strictness tracking. nullopt when the
/// row count passes `max_rows`.
std::optional<bool> fourier_motzkin_feasible(const LinearSystem& sys,
                                             std::size_t max_rows = 200000);

/// The dual side of the alternative, split by its disjunction into two
/// systems over (y, z). Both are infeasible iff the primal side is feasible.
std::pair<LinearSystem, LinearSystem> opposite_systems(const LinearSystem& sys);

LinearSystem random_system(std::mt19937_64& rng, std::size_t max_vars,
                           std::size_t max_rows);

MinHomInstance random_instance(std::mt19937_64& rng, const Language& l,
                               std::size_t nvars, std::size_t ncons);

/// Three elements, `num_relations` random relations of arity 1..3, one
/// finite valuation and one with occasional infinities.
Language random_language(std::mt19937_64& rng, std::size_t num_relations = 3);

/// One finite injective valuation, relations of arity 2 or 3.
Language random_minsol_language(std::mt19937_64& rng, std::size_t num_relations = 2);

/// Rejection-sampled: a min-core on all three elements that is not GMC.
Language random_hard_min_core(std::mt19937_64& rng);

}  // namespace vcsp::testing
