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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vcsp/relation.hpp"

namespace vcsp {

inline constexpr std::size_t kDefaultMaxArity = 4;

/// Total k-ary operation on {0..n-1}. The table is indexed by argument
/// tuples in lexicographic order, first argument most significant.
class Operation {
 public:
  Operation() = default;
  Operation(std::size_t domain_size, std::size_t arity, std::vector<Value> table);

  static Operation projection(std::size_t domain_size, std::size_t arity,
                              std::size_t i);
  static Operation constant(std::size_t domain_size, std::size_t arity, Value c);
  static Operation from_function(
      std::size_t domain_size, std::size_t arity,
      const std::function<Value(std::span<const Value>)>& f);

  std::size_t arity() const { return arity_; }
  std::size_t domain_size() const { return domain_size_; }
  const std::vector<Value>& table() const { return table_; }
  std::size_t num_cells() const { return table_.size(); }

  std::size_t index(std::span<const Value> args) const;
  Tuple args_of(std::size_t index) const;

  Value operator()(std::span<const Value> args) const { return table_[index(args)]; }
  Value operator()(Value x) const { return table_[x]; }
  Value operator()(Value x, Value y) const { return table_[x * domain_size_ + y]; }
  Value operator()(Value x, Value y, Value z) const {
    return table_[(x * domain_size_ + y) * domain_size_ + z];
  }

  bool is_idempotent() const;
  bool is_conservative() const;
  /// f(x,y) = f(y,x) for the given binary operation on {a, b}.
  bool commutative_on(Value a, Value b) const;
  bool conservative_on(Value a, Value b) const;
  bool idempotent_on(Value a, Value b) const;
  /// 1 or 2 if the restriction to {a,b} is pr1 / pr2, else 0. Binary only.
  int projection_on(Value a, Value b) const;
  /// m(a,b,b) = m(a,b,a) = m(b,b,a) = a and symmetrically for b.
  bool arithmetical_on(Value a, Value b) const;

  /// Image of the set S (unary operations).
  ValueSet image() const;

  friend bool operator==(const Operation&, const Operation&) = default;
  friend auto operator<=>(const Operation& x, const Operation& y) {
    return x.table_ <=> y.table_;
  }

 private:
  std::size_t domain_size_ = 0;
  std::size_t arity_ = 0;
  std::vector<Value> table_;
};

/// conj(f)(x,y) = f(y,x).
Operation conjugate(const Operation& f);
/// f[g,h](x,y) = f(g(x,y), h(x,y)).
Operation superpose(const Operation& f, const Operation& g, const Operation& h);

/// f applied componentwise to the columns (t^1,...,t^k).
Tuple apply_columns(const Operation& f, const std::vector<const Tuple*>& tuples);

bool preserves(const Operation& f, const Relation& r);
bool is_polymorphism(const Operation& f, const std::vector<Relation>& gamma);

std::string to_string(const Operation& f, const Domain& domain);

}  // namespace vcsp
