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
#include <variant>
#include <vector>

#include "vcsp/fpol.hpp"
#include "vcsp/language.hpp"
#include "vcsp/polymorphism.hpp"

namespace vcsp {

/// Unordered pairs are stored with first < second.
std::vector<Pair> all_pairs(std::size_t n);

struct GmcWitness {
  Operation f;
};

struct BsmWitness {
  Value a = 0, b = 0, c = 0;  // b is the middle element
  Operation meet, join;
};

/// An (a,b)-dominating binary fractional polymorphism; it licenses
/// removing b.
struct Elimination {
  Value a = 0, b = 0;
  FractionalPolymorphism fpol;
};

struct SubsetElimination {
  ValueSet subset = 0;
  /// Index into GwtpWitness::eliminations; unset when the subset holds no
  /// pair of A.
  std::optional<std::size_t> elimination;
};

struct GwtpWitness {
  std::vector<Pair> A, B;
  Operation f1, f2, m;
  std::vector<Elimination> eliminations;
  /// Every pp-definable nonempty subset, ascending.
  std::vector<SubsetElimination> subsets;

  const Elimination* elimination_for(ValueSet u) const;
};

using TypeWitness = std::variant<GmcWitness, BsmWitness, GwtpWitness>;

std::string type_name(const TypeWitness& w);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void merge(const ValidationReport& other, const std::string& prefix = {});
};

/// Table and valuation checks of the witness against the language,
/// independent of how it was found.
ValidationReport validate_witness(const Language& lang, const TypeWitness& w,
                                  const FindOptions& opts = {});

/// The minima of every coordinate under nu, as a tuple, lie in r.
bool check_generalised_min_closed(const Relation& r, const Valuation& nu);

std::optional<GmcWitness> is_gmc(const Language& lang, const FindOptions& opts = {});

/// Tries each element as the middle one.
std::optional<BsmWitness> is_bsm(const Language& lang, const FindOptions& opts = {});

struct GwtpOptions {
  FpolOptions fpol;
};

struct GwtpSearch {
  std::optional<GwtpWitness> witness;
  std::string reason;  // why no (A,B) worked
};

/// Exhaustive over A within B over all pairs, |D| <= 3.
GwtpSearch is_gwtp(const Language& lang, const GwtpOptions& opts = {});

/// s(a,r,e,a) = s(r,a,r,e), idempotent, preserving gamma.
std::optional<Operation> find_siggers(const std::vector<Relation>& gamma,
                                      std::size_t domain_size,
                                      const FindOptions& opts = {});
bool is_siggers(const Operation& s);
/// Decided by the existence of a Siggers polymorphism of gamma with
/// constants, which rests on the CSP dichotomy theorem.
bool csp_tractable(const std::vector<Relation>& gamma, std::size_t domain_size,
                   const FindOptions& opts = {});

enum class PairOperationKind { kSemilattice, kMajority, kMinority };
std::string to_string(PairOperationKind k);

struct PairOperation {
  Pair pair;
  PairOperationKind kind;
  Operation op;
};

/// Whether op restricted to `pair` is of the stated kind.
bool acts_as(const Operation& op, PairOperationKind kind, Pair pair);

/// For a conservative language: per pair a polymorphism that is a
/// semilattice, majority or minority on it, or the first pair with none.
struct PairTractability {
  std::vector<PairOperation> operations;
  std::optional<Pair> missing;
};
PairTractability conservative_pair_operations(const std::vector<Relation>& gamma,
                                              std::size_t domain_size,
                                              const FindOptions& opts = {});
std::optional<PairOperation> find_pair_operation(const std::vector<Relation>& gamma,
                                                 std::size_t domain_size, Pair pair,
                                                 const FindOptions& opts = {});

/// Both ICC binary polymorphisms on {a,b}: f(a,b)=f(b,a)=a and =b.
bool has_icc_pair(const std::vector<Relation>& gamma, std::size_t domain_size,
                  Pair pair, const FindOptions& opts = {});

}  // namespace vcsp
