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

#include "vcsp/operation.hpp"

#include "vcsp/errors.hpp"

namespace vcsp {

namespace {
std::size_t cell_count(std::size_t n, std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) {
    c *= n;
    if (c > (std::size_t{1} << 24)) throw ResourceError("operation table too large");
  }
  return c;
}
}  // namespace

Operation::Operation(std::size_t domain_size, std::size_t arity,
                     std::vector<Value> table)
    : domain_size_(domain_size), arity_(arity), table_(std::move(table)) {
  if (arity == 0) throw ContractError("operation arity must be positive");
  if (domain_size == 0 || domain_size > kMaxDomainSize)
    throw ContractError("operation over unsupported domain size");
  if (table_.size() != cell_count(domain_size, arity))
    throw ContractError("operation table has " + std::to_string(table_.size()) +
                        " cells, expected " +
                        std::to_string(cell_count(domain_size, arity)));
  for (Value v : table_)
    if (v >= domain_size) throw ContractError("operation value outside domain");
}

Operation Operation::from_function(
    std::size_t n, std::size_t k,
    const std::function<Value(std::span<const Value>)>& f) {
  std::size_t cells = cell_count(n, k);
  std::vector<Value> table(cells);
  Tuple args(k, 0);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t r = c;
    for (std::size_t i = k; i > 0; --i) {
      args[i - 1] = static_cast<Value>(r % n);
      r /= n;
    }
    table[c] = f(args);
  }
  return Operation(n, k, std::move(table));
}

Operation Operation::projection(std::size_t n, std::size_t k, std::size_t i) {
  if (i >= k) throw ContractError("projection index out of range");
  return from_function(n, k, [i](std::span<const Value> a) { return a[i]; });
}

Operation Operation::constant(std::size_t n, std::size_t k, Value c) {
  return from_function(n, k, [c](std::span<const Value>) { return c; });
}

std::size_t Operation::index(std::span<const Value> args) const {
  if (args.size() != arity_) throw ContractError("operation applied to wrong arity");
  std::size_t c = 0;
  for (Value v : args) c = c * domain_size_ + v;
  return c;
}

Tuple Operation::args_of(std::size_t index) const {
  Tuple args(arity_);
  for (std::size_t i = arity_; i > 0; --i) {
    args[i - 1] = static_cast<Value>(index % domain_size_);
    index /= domain_size_;
  }
  return args;
}

bool Operation::is_idempotent() const {
  for (Value x = 0; x < domain_size_; ++x) {
    Tuple a(arity_, x);
    if ((*this)(a) != x) return false;
  }
  return true;
}

bool Operation::is_conservative() const {
  for (std::size_t c = 0; c < table_.size(); ++c) {
    Tuple a = args_of(c);
    bool ok = false;
    for (Value v : a) ok = ok || v == table_[c];
    if (!ok) return false;
  }
  return true;
}

bool Operation::commutative_on(Value a, Value b) const {
  if (arity_ != 2) throw ContractError("commutative_on needs a binary operation");
  return (*this)(a, b) == (*this)(b, a);
}

bool Operation::idempotent_on(Value a, Value b) const {
  Tuple x(arity_, a), y(arity_, b);
  return (*this)(x) == a && (*this)(y) == b;
}

bool Operation::conservative_on(Value a, Value b) const {
  // Every argument tuple over {a,b} maps into {a,b}.
  std::size_t cells = table_.size();
  for (std::size_t c = 0; c < cells; ++c) {
    Tuple t = args_of(c);
    bool inside = true;
    for (Value v : t) inside = inside && (v == a || v == b);
    if (!inside) continue;
    if (table_[c] != a && table_[c] != b) return false;
  }
  return true;
}

int Operation::projection_on(Value a, Value b) const {
  if (arity_ != 2) throw ContractError("projection_on needs a binary operation");
  if (!idempotent_on(a, b)) return 0;
  Value ab = (*this)(a, b), ba = (*this)(b, a);
  if (ab == a && ba == b) return 1;
  if (ab == b && ba == a) return 2;
  return 0;
}

bool Operation::arithmetical_on(Value a, Value b) const {
  if (arity_ != 3) throw ContractError("arithmetical_on needs a ternary operation");
  const Operation& m = *this;
  return m(a, b, b) == a && m(a, b, a) == a && m(b, b, a) == a &&
         m(b, a, a) == b && m(b, a, b) == b && m(a, a, b) == b;
}

ValueSet Operation::image() const {
  ValueSet s = 0;
  for (Value v : table_) s |= bit(v);
  return s;
}

Operation conjugate(const Operation& f) {
  if (f.arity() != 2) throw ContractError("conjugate needs a binary operation");
  return Operation::from_function(f.domain_size(), 2, [&](std::span<const Value> a) {
    return f(a[1], a[0]);
  });
}

Operation superpose(const Operation& f, const Operation& g, const Operation& h) {
  if (f.arity() != 2 || g.arity() != 2 || h.arity() != 2)
    throw ContractError("superpose needs binary operations");
  if (f.domain_size() != g.domain_size() || f.domain_size() != h.domain_size())
    throw ContractError("superpose across different domains");
  return Operation::from_function(f.domain_size(), 2, [&](std::span<const Value> a) {
    return f(g(a[0], a[1]), h(a[0], a[1]));
  });
}

Tuple apply_columns(const Operation& f, const std::vector<const Tuple*>& tuples) {
  if (tuples.size() != f.arity()) throw ContractError("apply_columns: wrong column count");
  std::size_t r = tuples.front()->size();
  Tuple out(r);
  Tuple args(f.arity());
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < f.arity(); ++i) args[i] = (*tuples[i])[j];
    out[j] = f(args);
  }
  return out;
}

bool preserves(const Operation& f, const Relation& r) {
  if (r.domain_size() != f.domain_size())
    throw ContractError("operation and relation over different domains");
  if (r.empty()) return true;
  std::size_t k = f.arity();
  std::vector<std::size_t> idx(k, 0);
  std::vector<const Tuple*> cols(k);
  const auto& ts = r.tuples();
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cols[i] = &ts[idx[i]];
    if (!r.contains(apply_columns(f, cols))) return false;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++idx[i] < ts.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
  }
}

bool is_polymorphism(const Operation& f, const std::vector<Relation>& gamma) {
  for (const auto& r : gamma)
    if (!preserves(f, r)) return false;
  return true;
}

std::string to_string(const Operation& f, const Domain& domain) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.table().size(); ++i) {
    if (i) s += " ";
    s += domain.label(f.table()[i]);
  }
  return s + "]";
}

}  // namespace vcsp
