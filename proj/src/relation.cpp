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

#include "vcsp/relation.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "vcsp/errors.hpp"

namespace vcsp {

int popcount(ValueSet s) { return std::popcount(s); }

std::vector<Value> members(ValueSet s) {
  std::vector<Value> out;
  for (Value v = 0; s != 0; ++v, s >>= 1)
    if (s & 1U) out.push_back(v);
  return out;
}

Domain::Domain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ContractError("domain must be nonempty");
  if (labels_.size() > kMaxDomainSize)
    throw ContractError("domain size " + std::to_string(labels_.size()) +
                        " exceeds the cap of " +
                        std::to_string(kMaxDomainSize));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw ContractError("empty domain label");
    if (!seen.insert(l).second)
      throw ContractError("duplicate domain label '" + l + "'");
  }
}

Domain Domain::standard(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    labels.emplace_back(1, static_cast<char>('a' + i));
  return Domain(std::move(labels));
}

Value Domain::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Value>(i);
  throw ContractError("unknown domain label '" + std::string(label) + "'");
}

bool Domain::contains_label(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

namespace {
constexpr std::size_t kDenseLimit = std::size_t{1} << 16;

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    r *= base;
    if (r > (std::size_t{1} << 40)) return r;
  }
  return r;
}
}  // namespace

Relation::Relation(std::size_t domain_size, std::size_t arity,
                   std::vector<Tuple> tuples)
    : domain_size_(domain_size), arity_(arity), tuples_(std::move(tuples)) {
  if (domain_size == 0 || domain_size > kMaxDomainSize)
    throw ContractError("relation over unsupported domain size");
  if (arity == 0) throw ContractError("relation arity must be positive");
  for (const auto& t : tuples_) {
    if (t.size() != arity)
      throw ContractError("tuple length " + std::to_string(t.size()) +
                          " differs from arity " + std::to_string(arity));
    for (Value v : t)
      if (v >= domain_size) throw ContractError("tuple value outside domain");
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  std::size_t cells = power(domain_size, arity);
  if (cells <= kDenseLimit) {
    member_.assign(cells, false);
    for (const auto& t : tuples_) member_[code(t)] = true;
  }
}

Relation Relation::unary(std::size_t domain_size, ValueSet values) {
  std::vector<Tuple> t;
  for (Value v : members(values))
    if (v < domain_size) t.push_back({v});
  return Relation(domain_size, 1, std::move(t));
}

Relation Relation::full(std::size_t domain_size, std::size_t arity) {
  std::vector<Tuple> all;
  Tuple t(arity, 0);
  while (true) {
    all.push_back(t);
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < domain_size) break;
      t[i] = 0;
      if (i == 0) return Relation(domain_size, arity, std::move(all));
    }
  }
}

std::size_t Relation::code(std::span<const Value> t) const {
  std::size_t c = 0;
  for (Value v : t) c = c * domain_size_ + v;
  return c;
}

bool Relation::contains(std::span<const Value> t) const {
  if (t.size() != arity_) return false;
  if (!member_.empty()) {
    for (Value v : t)
      if (v >= domain_size_) return false;
    return member_[code(t)];
  }
  Tuple key(t.begin(), t.end());
  return std::binary_search(tuples_.begin(), tuples_.end(), key);
}

ValueSet Relation::as_set() const {
  if (arity_ != 1) throw ContractError("as_set on a non-unary relation");
  ValueSet s = 0;
  for (const auto& t : tuples_) s |= bit(t[0]);
  return s;
}

std::strong_ordering operator<=>(const Relation& x, const Relation& y) {
  if (auto c = x.arity_ <=> y.arity_; c != 0) return c;
  if (auto c = x.domain_size_ <=> y.domain_size_; c != 0) return c;
  return x.tuples_ <=> y.tuples_;
}

Relation pictogram(Pictogram kind, std::size_t n, Value u, Value v, Value x,
                   Value y) {
  switch (kind) {
    case Pictogram::kMis:
      return Relation(n, 2, {{u, x}, {u, y}, {v, x}});
    case Pictogram::kCross:
      return Relation(n, 2, {{u, y}, {v, x}});
    case Pictogram::kAll:
      return Relation(n, 2, {{u, x}, {u, y}, {v, x}, {v, y}});
    case Pictogram::kFlipMis:
      return Relation(n, 2, {{u, x}, {v, x}, {v, y}});
  }
  throw ContractError("unknown pictogram");
}

Relation compose(const Relation& r1, const Relation& r2) {
  if (r1.arity() != 2 || r2.arity() != 2)
    throw ContractError("compose requires binary relations");
  if (r1.domain_size() != r2.domain_size())
    throw ContractError("compose across different domains");
  std::vector<Tuple> out;
  for (const auto& p : r1.tuples())
    for (const auto& q : r2.tuples())
      if (p[1] == q[0]) out.push_back({p[0], q[1]});
  return Relation(r1.domain_size(), 2, std::move(out));
}

Relation restrict_to(const Relation& r, ValueSet subset) {
  std::vector<Tuple> out;
  for (const auto& t : r.tuples())
    if (std::all_of(t.begin(), t.end(), [&](Value v) { return has(subset, v); }))
      out.push_back(t);
  return Relation(r.domain_size(), r.arity(), std::move(out));
}

Relation project(const Relation& r, std::span<const std::size_t> positions) {
  std::vector<Tuple> out;
  for (const auto& t : r.tuples()) {
    Tuple p;
    for (auto i : positions) {
      if (i >= r.arity()) throw ContractError("projection index out of range");
      p.push_back(t[i]);
    }
    out.push_back(std::move(p));
  }
  return Relation(r.domain_size(), positions.size(), std::move(out));
}

Relation complement(const Relation& r) {
  Relation all = Relation::full(r.domain_size(), r.arity());
  std::vector<Tuple> out;
  for (const auto& t : all.tuples())
    if (!r.contains(t)) out.push_back(t);
  return Relation(r.domain_size(), r.arity(), std::move(out));
}

Relation inverse(const Relation& r) {
  std::vector<Tuple> out;
  for (auto t : r.tuples()) {
    std::reverse(t.begin(), t.end());
    out.push_back(std::move(t));
  }
  return Relation(r.domain_size(), r.arity(), std::move(out));
}

std::string to_string(const Relation& r, const Domain& domain) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ",";
    s += "(";
    const auto& t = r.tuples()[i];
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j) s += ",";
      s += domain.label(t[j]);
    }
    s += ")";
  }
  return s + "}";
}

}  // namespace vcsp
