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

#include "vcsp/csp.hpp"
#include "vcsp/language.hpp"
#include "vcsp/lp.hpp"
#include "vcsp/polymorphism.hpp"

namespace vcsp {

/// Positive rational weights on k-ary operations, sorted by operation.
struct FractionalPolymorphism {
  std::size_t arity = 0;
  std::vector<std::pair<Operation, Rational>> weights;

  /// Merges duplicates, drops zero weights and sorts.
  static FractionalPolymorphism from_weights(
      std::size_t arity, std::vector<std::pair<Operation, Rational>> weights);
};

struct FpolCheck {
  bool ok = false;
  std::string reason;
};

/// Weights positive and summing to 1, support in pol(Gamma), and for every
/// nu and every x_1..x_k: sum_g w(g) nu(g(x)) <= (1/k) sum_i nu(x_i).
FpolCheck validate_fpol(const Language& lang, const FractionalPolymorphism& w);

/// sum_{g(a,b)=a} w(g) >= 1/2 > sum_{g(a,b)=b} w(g).
bool is_dominating(const FractionalPolymorphism& w, Value a, Value b);

struct FpolOptions {
  std::size_t budget = kDefaultEnumerationBudget;
  FindOptions find;
};

/// Binary polymorphisms g with nu(g(x,y)) < inf whenever x, y are in D_nu,
/// for every nu. Lexicographic order.
std::vector<Operation> finite_binary_polymorphisms(const Language& lang,
                                                   const OperationConstraint* extra = nullptr,
                                                   const FpolOptions& opts = {});

/// One LP row per nu and (x,y) with x, y in D_nu, in (nu, x, y) order.
struct ValuationRow {
  std::size_t valuation;
  Value x, y;
};
std::vector<ValuationRow> valuation_rows(const Language& lang);

struct DominationQuery {
  Value a = 0, b = 0;
  std::vector<Operation> omega;
  /// Leading weak rows follow valuation_rows(); then sum u <= 1,
  /// -sum u <= -1, -sum_{g(a,b)=a} u <= -1/2; one strict row
  /// sum_{g(a,b)=b} u < 1/2. Every u is nonnegative.
  LinearSystem system;
  MotzkinCertificate certificate;
  std::optional<FractionalPolymorphism> fpol;  // set iff primal
};

DominationQuery exists_dominating_fpol(const Language& lang, Value a, Value b,
                                       const FpolOptions& opts = {});

/// Second-order indicator instance: variables D^2 (index x*|D|+y, named
/// by the two labels), one constraint per relation and pair of tuples.
/// Its solutions are exactly the binary polymorphisms.
MinHomInstance binary_indicator_instance(const Language& lang);

struct SeparatingValuation {
  MinHomInstance instance;
  Variable variable = 0;  // the (a,b) variable
  Valuation valuation;    // expressed by `instance` at `variable`
  /// Weight on (nu,(x,y)) is scale * v + 1 with v the dual multiplier,
  /// standing in for v + epsilon with epsilon = 1/scale.
  Rational scale;
};

/// From an infeasible domination query: an instance expressing nu with
/// inf > nu(a) > nu(b). ContractError if the query was feasible or the
/// certificate does not separate.
SeparatingValuation construct_separating_valuation(const Language& lang,
                                                   const DominationQuery& query,
                                                   const SearchOptions& search = {});

struct CrossWitness {
  MinHomInstance instance;
  Variable ab = 0, ba = 0;
  /// Per valuation_rows(). The dual multipliers, or when some valuation is
  /// infinite and a strictly positive solution of the same inequalities
  /// exists, that solution.
  std::vector<Rational> p;
  /// 0 when the weights are p itself; otherwise the weights are
  /// scale * p + 1.
  Rational scale;
  Relation projection;      // optimal projection at (ab, ba)
  Relation argmin;          // sigma-argmin of `projection`
  /// argmin equals cross(a,b;a,b), checked by exact optimisation.
  bool validated = false;
};

struct FpolAlternative {
  std::optional<FractionalPolymorphism> fpol;
  std::optional<Operation> f;  // in supp, off {a,b} swap, sigma-improving
  std::optional<CrossWitness> cross;
  LinearSystem system;  // the transposed system over z_{i,j,g}
  MotzkinCertificate certificate;
};

/// Either w in fpol with some f in supp(w), {f(a,b), f(b,a)} != {a,b} and
/// sigma(f(a,b)) + sigma(f(b,a)) <= sigma(a) + sigma(b), or the weights p
/// and an instance whose optimal (ab, ba)-projection has sigma-argmin
/// cross(a,b;a,b).
FpolAlternative lemma_fpol_alternative(const Language& lang, Value a, Value b,
                                       const Valuation& sigma,
                                       const FpolOptions& opts = {},
                                       const SearchOptions& search = {});

struct SymmetricQuery {
  std::vector<Operation> omega;  // commutative members of Omega
  LinearSystem system;
  MotzkinCertificate certificate;
  std::optional<FractionalPolymorphism> fpol;
};

/// Binary fractional polymorphism supported on commutative operations.
SymmetricQuery exists_symmetric_fpol(const Language& lang, std::size_t arity = 2,
                                     const FpolOptions& opts = {});

}  // namespace vcsp
