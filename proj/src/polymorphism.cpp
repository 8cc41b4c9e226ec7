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

#include "vcsp/polymorphism.hpp"

#include <map>
#include <set>

#include "vcsp/errors.hpp"

namespace vcsp {

void OperationConstraint::equal(Tuple x, Tuple y) {
  std::vector<Tuple> eq;
  for (Value v = 0; v < domain_size; ++v) eq.push_back({v, v});
  links.push_back({{std::move(x), std::move(y)}, std::move(eq)});
}

void OperationConstraint::forbid_image(const std::vector<Tuple>& columns,
                                       const Relation& allowed_images) {
  if (columns.size() != arity) throw ContractError("forbid_image: wrong column count");
  std::size_t rows = columns.front().size();
  if (allowed_images.arity() != rows)
    throw ContractError("forbid_image: image arity mismatch");
  std::vector<Tuple> cells(rows, Tuple(arity));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < arity; ++i) cells[j][i] = columns[i].at(j);
  Relation bad = complement(allowed_images);
  links.push_back({std::move(cells), bad.tuples()});
}

namespace {

Tuple args_tuple(std::initializer_list<Value> v) { return Tuple(v); }

ValueSet arg_set(const Tuple& t) {
  ValueSet s = 0;
  for (Value v : t) s |= bit(v);
  return s;
}

bool all_distinct(const Tuple& t) { return popcount(arg_set(t)) == static_cast<int>(t.size()); }

bool is_full(const Relation& r) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < r.arity(); ++i) cells *= r.domain_size();
  return r.size() == cells;
}

void need_arity(const OperationConstraint& c, std::size_t k, const char* what) {
  if (c.arity != k)
    throw ContractError(std::string(what) + " requires arity " + std::to_string(k));
}

}  // namespace

bool OperationConstraint::satisfied_by(const Operation& f) const {
  if (f.arity() != arity || f.domain_size() != domain_size) return false;
  if (idempotent && !f.is_idempotent()) return false;
  if (conservative && !f.is_conservative()) return false;
  for (auto [a, b] : commutative_on)
    if (!f.commutative_on(a, b)) return false;
  for (auto [a, b] : projection_on)
    if (f.projection_on(a, b) == 0) return false;
  for (auto [a, b] : arithmetical_on)
    if (!f.arithmetical_on(a, b)) return false;
  for (auto [a, b] : in_up)
    if (f(a, b) != a || f(b, a) != a) return false;
  for (auto [a, b] : in_down)
    if (f(a, b) != b || f(b, a) != b) return false;
  if (range_in_args) {
    for (std::size_t c = 0; c < f.num_cells(); ++c) {
      Tuple t = f.args_of(c);
      if (all_distinct(t) && !has(arg_set(t), f.table()[c])) return false;
    }
  }
  for (const auto& [args, allowed] : cell_allowed)
    if (!has(allowed, f(args))) return false;
  for (const auto& l : links) {
    Tuple img;
    for (const auto& cell : l.cells) img.push_back(f(cell));
    bool found = false;
    for (const auto& t : l.allowed) found = found || t == img;
    if (!found) return false;
  }
  return true;
}

CspModel indicator_model(const std::vector<Relation>& gamma,
                         const OperationConstraint& c) {
  std::size_t n = c.domain_size, k = c.arity;
  if (n == 0 || k == 0) throw ContractError("operation constraint without shape");
  Operation shape = Operation::constant(n, k, 0);
  std::size_t cells = shape.num_cells();
  CspModel m(cells, n);
  auto cell = [&](const Tuple& args) {
    for (Value v : args)
      if (v >= n) throw ContractError("operation constraint value outside domain");
    return shape.index(args);
  };

  if (c.idempotent)
    for (Value x = 0; x < n; ++x) m.restrict(cell(Tuple(k, x)), bit(x));
  for (std::size_t i = 0; i < cells; ++i) {
    Tuple t = shape.args_of(i);
    if (c.conservative || (c.range_in_args && all_distinct(t)))
      m.restrict(i, arg_set(t));
  }
  auto link = [&](std::vector<Variable> scope, std::vector<Tuple> allowed) {
    m.add_table(std::move(scope),
                std::make_shared<const std::vector<Tuple>>(std::move(allowed)));
  };
  for (auto [a, b] : c.commutative_on) {
    need_arity(c, 2, "commutative_on");
    std::vector<Tuple> eq;
    for (Value v = 0; v < n; ++v) eq.push_back({v, v});
    link({cell(args_tuple({a, b})), cell(args_tuple({b, a}))}, eq);
  }
  for (auto [a, b] : c.projection_on) {
    need_arity(c, 2, "projection_on");
    m.restrict(cell(args_tuple({a, a})), bit(a));
    m.restrict(cell(args_tuple({b, b})), bit(b));
    link({cell(args_tuple({a, b})), cell(args_tuple({b, a}))}, {{a, b}, {b, a}});
  }
  for (auto [a, b] : c.arithmetical_on) {
    need_arity(c, 3, "arithmetical_on");
    for (auto [x, y] : {Pair{a, b}, Pair{b, a}}) {
      m.restrict(cell(args_tuple({x, y, y})), bit(x));
      m.restrict(cell(args_tuple({x, y, x})), bit(x));
      m.restrict(cell(args_tuple({y, y, x})), bit(x));
    }
  }
  for (auto [a, b] : c.in_up) {
    need_arity(c, 2, "in_up");
    m.restrict(cell(args_tuple({a, b})), bit(a));
    m.restrict(cell(args_tuple({b, a})), bit(a));
  }
  for (auto [a, b] : c.in_down) {
    need_arity(c, 2, "in_down");
    m.restrict(cell(args_tuple({a, b})), bit(b));
    m.restrict(cell(args_tuple({b, a})), bit(b));
  }
  for (const auto& [args, allowed] : c.cell_allowed) m.restrict(cell(args), allowed);
  for (const auto& l : c.links) {
    std::vector<Variable> scope;
    for (const auto& a : l.cells) scope.push_back(cell(a));
    if (scope.size() == 1) {
      ValueSet s = 0;
      for (const auto& t : l.allowed) s |= bit(t.at(0));
      m.restrict(scope[0], s);
    } else {
      link(std::move(scope), l.allowed);
    }
  }

  for (const auto& r : gamma) {
    if (r.domain_size() != n) throw ContractError("relation over a different domain");
    if (r.empty() || is_full(r)) continue;
    const auto& ts = r.tuples();
    std::size_t ar = r.arity();
    if (ar == 1) {
      // Unary: every cell over R maps into R.
      ValueSet s = r.as_set();
      for (std::size_t i = 0; i < cells; ++i)
        if ((arg_set(shape.args_of(i)) & ~s) == 0) m.restrict(i, s);
      continue;
    }
    auto shared = share_tuples(r);
    std::set<std::vector<Variable>> seen;
    std::vector<std::size_t> idx(k, 0);
    Tuple args(k);
    while (true) {
      std::vector<Variable> scope(ar);
      for (std::size_t j = 0; j < ar; ++j) {
        for (std::size_t i = 0; i < k; ++i) args[i] = ts[idx[i]][j];
        scope[j] = shape.index(args);
      }
      if (seen.insert(scope).second) m.add_table(scope, shared);
      std::size_t i = k;
      bool done = false;
      while (i > 0) {
        --i;
        if (++idx[i] < ts.size()) break;
        idx[i] = 0;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  return m;
}

namespace {

void check_shape(const OperationConstraint& c, const FindOptions& opts) {
  if (c.arity == 0 || c.arity > opts.max_arity)
    throw ResourceError("operation arity " + std::to_string(c.arity) +
                        " exceeds the cap of " + std::to_string(opts.max_arity));
}

Operation to_operation(const OperationConstraint& c, const Assignment& a) {
  return Operation(c.domain_size, c.arity, std::vector<Value>(a.begin(), a.end()));
}

void post_check(const std::vector<Relation>& gamma, const OperationConstraint& c,
                const Operation& f) {
  if (!is_polymorphism(f, gamma) || !c.satisfied_by(f))
    throw std::logic_error("indicator search returned an invalid operation");
}

}  // namespace

std::optional<Operation> find_operation(const std::vector<Relation>& gamma,
                                        const OperationConstraint& c,
                                        const FindOptions& opts) {
  check_shape(c, opts);
  CspModel m = indicator_model(gamma, c);
  SearchOptions so = opts.search;
  so.order = VarOrder::kLexicographic;
  auto a = solve_any(m, so);
  if (!a) return std::nullopt;
  Operation f = to_operation(c, *a);
  post_check(gamma, c, f);
  return f;
}

OperationList find_operations(const std::vector<Relation>& gamma,
                              const OperationConstraint& c, std::size_t limit,
                              const FindOptions& opts) {
  check_shape(c, opts);
  CspModel m = indicator_model(gamma, c);
  auto all = solve_all(m, limit, opts.search);
  OperationList out;
  out.truncated = all.truncated;
  for (const auto& a : all.solutions) {
    Operation f = to_operation(c, a);
    post_check(gamma, c, f);
    out.operations.push_back(std::move(f));
  }
  return out;
}

std::vector<Operation> enumerate_binary_polymorphisms(
    const std::vector<Relation>& gamma, const OperationConstraint& filter,
    std::size_t budget, const FindOptions& opts) {
  if (filter.arity != 2) throw ContractError("filter must describe binary operations");
  auto list = find_operations(gamma, filter, budget, opts);
  if (list.truncated)
    throw ResourceError("more than " + std::to_string(budget) +
                        " binary polymorphisms");
  return std::move(list.operations);
}

}  // namespace vcsp
