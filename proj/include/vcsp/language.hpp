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

#include "vcsp/rational.hpp"
#include "vcsp/relation.hpp"

namespace vcsp {

/// Unary cost function D -> Q+ u {inf}.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<ExtRational> values);
  static Valuation from_ints(std::initializer_list<long> values);

  std::size_t domain_size() const { return values_.size(); }
  const ExtRational& operator()(Value x) const { return values_.at(x); }
  const std::vector<ExtRational>& values() const { return values_; }

  /// D_nu = {x : nu(x) < inf}.
  ValueSet finite_part() const;
  bool is_finite() const { return finite_part() == full_set(values_.size()); }
  bool is_injective() const;

  /// Domain values sorted by increasing value, ties by index.
  std::vector<Value> order() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<ExtRational> values_;
};

struct NamedRelation {
  std::string name;
  Relation relation;
};

struct NamedValuation {
  std::string name;
  Valuation valuation;
};

/// A language (Gamma, Delta) over a labelled domain.
class Language {
 public:
  Language() = default;
  Language(Domain domain, std::vector<NamedRelation> relations,
           std::vector<NamedValuation> valuations);

  const Domain& domain() const { return domain_; }
  std::size_t domain_size() const { return domain_.size(); }
  const std::vector<NamedRelation>& named_relations() const {
    return relations_;
  }
  const std::vector<NamedValuation>& named_valuations() const {
    return valuations_;
  }
  std::vector<Relation> relations() const;
  std::vector<Valuation> valuations() const;

  const Relation& relation(std::size_t i) const {
    return relations_.at(i).relation;
  }
  const Valuation& valuation(std::size_t i) const {
    return valuations_.at(i).valuation;
  }
  std::optional<std::size_t> find_relation(const std::string& name) const;
  std::optional<std::size_t> find_valuation(const std::string& name) const;
  bool has_relation(const Relation& r) const;

  /// Appends, generating a fresh name when `name` is empty or taken.
  /// Returns the index of the relation (existing index if already present
  /// and `dedupe` is set).
  std::size_t add_relation(Relation r, std::string name = {},
                           bool dedupe = true);
  std::size_t add_valuation(Valuation v, std::string name = {});

  /// Every nonempty subset of D is a relation.
  bool is_conservative() const;

 private:
  std::string fresh_name(const std::string& stem) const;

  Domain domain_;
  std::vector<NamedRelation> relations_;
  std::vector<NamedValuation> valuations_;
};

/// New domain is `subset` in increasing index order, labels kept.
/// Relations lose tuples leaving the subset, valuations are restricted.
Language restrict_language(const Language& lang, ValueSet subset);

/// Index map old -> new for restrict_language (absent values map to 0xff).
std::vector<Value> restriction_index(std::size_t domain_size, ValueSet subset);
Relation reindex(const Relation& r, std::size_t new_size,
                 const std::vector<Value>& map);

/// Gamma^c: adds every constant relation {c}.
Language with_constants(const Language& lang);

/// Adds the given unary relations.
Language with_unaries(const Language& lang, const std::vector<ValueSet>& sets);

}  // namespace vcsp
