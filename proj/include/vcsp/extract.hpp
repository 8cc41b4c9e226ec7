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
#include <string>
#include <vector>

#include "vcsp/instance.hpp"
#include "vcsp/language.hpp"

namespace vcsp {

/// An instance whose optimal projection onto `output` is `relation`.
struct Gadget {
  MinHomInstance instance;
  std::vector<Variable> output;
  Relation relation;
};

/// Re-evaluates the gadget by exact optimisation.
bool check_gadget(const Language& lang, const Gadget& g);

/// A crisp gadget for a nonempty relation of the pp-closure: the relation
/// itself when it is in the language, else a shrunk indicator instance.
/// ContractError when r is not pp-definable.
Gadget pp_gadget(const Language& lang, const Relation& r);

/// gamma_1..gamma_7 (index 0..6) over the order a < b < c of nu.
std::vector<Relation> gamma_relations(const Valuation& nu);

struct GammaExtraction {
  int index = 0;  // 1..7
  Gadget gadget;
  std::vector<std::string> trace;
};

/// For a relation that is not generalised min-closed under the single
/// injective finite valuation: a gadget whose optimal projection is some
/// gamma_i. Relations outside the language must be pp-definable from it;
/// they enter through a shrunk indicator instance. ContractError on a
/// generalised min-closed r, a relation outside the pp-closure or an
/// unsuitable valuation.
GammaExtraction extract_gamma(const Language& lang, const Relation& r);

struct ConstantsExtraction {
  std::vector<Gadget> constants;  // indexed by value, relation {value}
  GammaExtraction gamma;
  std::vector<std::string> trace;
};

/// Weighted pp-definitions of every constant of a three-element min-core
/// that is not GMC. ContractError when the preconditions fail.
ConstantsExtraction extract_constants(const Language& lang);

/// The first relation of the language that is not generalised min-closed,
/// else the smallest such binary relation that is pp-definable.
std::optional<Relation> find_non_min_closed(const Language& lang);

}  // namespace vcsp
