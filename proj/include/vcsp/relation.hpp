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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vcsp {

/// Index of a domain element.
using Value = std::uint8_t;
using Tuple = std::vector<Value>;

/// Bit set over domain values.
using ValueSet = std::uint32_t;

inline constexpr std::size_t kMaxDomainSize = 6;

inline ValueSet bit(Value v) { return ValueSet{1} << v; }
inline ValueSet full_set(std::size_t n) { return (ValueSet{1} << n) - 1; }
inline bool has(ValueSet s, Value v) { return (s >> v) & 1U; }
int popcount(ValueSet s);
std::vector<Value> members(ValueSet s);

/// An indexed finite domain with unique labels.
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<std::string> labels);
  /// Labels "a", "b", "c", ...
  static Domain standard(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Value v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws ContractError on an unknown label.
  Value index_of(std::string_view label) const;
  bool contains_label(std::string_view label) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A finite relation: deduplicated tuples of one arity, kept in
/// lexicographic order so equality and serialisation are canonical.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t domain_size, std::size_t arity,
           std::vector<Tuple> tuples);

  static Relation unary(std::size_t domain_size, ValueSet values);
  static Relation full(std::size_t domain_size, std::size_t arity);

  std::size_t arity() const { return arity_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }

  bool contains(std::span<const Value> t) const;
  bool contains(std::initializer_list<Value> t) const {
    return contains(std::span<const Value>(t.begin(), t.size()));
  }

  /// For unary relations, the set of members.
  ValueSet as_set() const;

  friend bool operator==(const Relation& x, const Relation& y) {
    return x.arity_ == y.arity_ && x.domain_size_ == y.domain_size_ &&
           x.tuples_ == y.tuples_;
  }
  friend std::strong_ordering operator<=>(const Relation& x,
                                          const Relation& y);

 private:
  std::size_t code(std::span<const Value> t) const;

  std::size_t domain_size_ = 0;
  std::size_t arity_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<bool> member_;  // dense membership table when small
};

/// Two-column bipartite pictograms: left column (u over v), right column
/// (x over y).
enum class Pictogram { kMis, kCross, kAll, kFlipMis };

Relation pictogram(Pictogram kind, std::size_t domain_size, Value u, Value v,
                   Value x, Value y);

/// {(x,z) : exists y, (x,y) in r1 and (y,z) in r2}.
Relation compose(const Relation& r1, const Relation& r2);

/// Tuples of r whose entries all lie in `subset`.
Relation restrict_to(const Relation& r, ValueSet subset);

/// Coordinates listed in `positions`, in that order.
Relation project(const Relation& r, std::span<const std::size_t> positions);

Relation complement(const Relation& r);
Relation inverse(const Relation& r);

std::string to_string(const Relation& r, const Domain& domain);

}  // namespace vcsp
