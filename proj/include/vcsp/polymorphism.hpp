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
#include <optional>
#include <utility>
#include <vector>

#include "vcsp/csp.hpp"
#include "vcsp/operation.hpp"

namespace vcsp {

using Pair = std::pair<Value, Value>;

/// Table constraint over operation cells: the values at `cells` must form
/// one of `allowed`.
struct CellLink {
  std::vector<Tuple> cells;
  std::vector<Tuple> allowed;
};

/// Restrictions on an operation sought by find_operation. Every field is
/// both compiled into the search and re-checked on each result.
struct OperationConstraint {
  std::size_t domain_size = 0;
  std::size_t arity = 0;

  bool idempotent = false;
  bool conservative = false;
  /// Binary: f(a,b) = f(b,a).
  std::vector<Pair> commutative_on;
  /// Binary: restriction to {a,b} is pr1 or pr2.
  std::vector<Pair> projection_on;
  /// Ternary: arithmetical on {a,b}.
  std::vector<Pair> arithmetical_on;
  /// Binary: f(a,b) = f(b,a) = a.
  std::vector<Pair> in_up;
  /// Binary: f(a,b) = f(b,a) = b.
  std::vector<Pair> in_down;
  /// On argument tuples with pairwise distinct entries the value is one of
  /// the arguments.
  bool range_in_args = false;
  /// Explicit allowed values per argument tuple.
  std::vector<std::pair<Tuple, ValueSet>> cell_allowed;
  std::vector<CellLink> links;

  OperationConstraint() = default;
  OperationConstraint(std::size_t n, std::size_t k) : domain_size(n), arity(k) {}

  void allow(Tuple args, ValueSet values) {
    cell_allowed.emplace_back(std::move(args), values);
  }
  void fix(Tuple args, Value v) { allow(std::move(args), bit(v)); }
  void equal(Tuple x, Tuple y);
  /// The image of the columns (t^1..t^k) must avoid every listed tuple.
  void forbid_image(const std::vector<Tuple>& columns, const Relation& allowed_images);

  bool satisfied_by(const Operation& f) const;
};

struct FindOptions {
  std::size_t max_arity = kDefaultMaxArity;
  SearchOptions search;
};

/// Indicator-problem CSP: one variable per table cell, preservation of
/// every relation plus the cell constraints. The result (lexicographically
/// least table) is re-checked before returning; nullopt is a proof of
/// nonexistence.
std::optional<Operation> find_operation(const std::vector<Relation>& gamma,
                                        const OperationConstraint& c,
                                        const FindOptions& opts = {});

struct OperationList {
  std::vector<Operation> operations;
  bool truncated = false;
};

/// All solutions in lexicographic table order, at most `limit`.
OperationList find_operations(const std::vector<Relation>& gamma,
                              const OperationConstraint& c, std::size_t limit,
                              const FindOptions& opts = {});

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 21;

/// Every binary polymorphism passing `filter`. ResourceError if more than
/// `budget` exist.
std::vector<Operation> enumerate_binary_polymorphisms(
    const std::vector<Relation>& gamma, const OperationConstraint& filter,
    std::size_t budget = kDefaultEnumerationBudget, const FindOptions& opts = {});

/// The CSP model itself, for callers that add their own constraints.
CspModel indicator_model(const std::vector<Relation>& gamma,
                         const OperationConstraint& c);

}  // namespace vcsp
