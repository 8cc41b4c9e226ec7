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

#include "vcsp/language.hpp"

#include <algorithm>
#include <numeric>

#include "vcsp/errors.hpp"

namespace vcsp {

Valuation::Valuation(std::vector<ExtRational> values)
    : values_(std::move(values)) {
  for (const auto& v : values_)
    if (v.is_finite() && sgn(v.value()) < 0)
      throw ContractError("valuation values must be nonnegative");
}

Valuation Valuation::from_ints(std::initializer_list<long> values) {
  std::vector<ExtRational> v;
  for (long x : values) v.emplace_back(x);
  return Valuation(std::move(v));
}

ValueSet Valuation::finite_part() const {
  ValueSet s = 0;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i].is_finite()) s |= bit(static_cast<Value>(i));
  return s;
}

bool Valuation::is_injective() const {
  for (std::size_t i = 0; i < values_.size(); ++i)
    for (std::size_t j = i + 1; j < values_.size(); ++j)
      if (values_[i] == values_[j]) return false;
  return true;
}

std::vector<Value> Valuation::order() const {
  std::vector<Value> idx(values_.size());
  std::iota(idx.begin(), idx.end(), Value{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Value x, Value y) {
    return values_[x] < values_[y];
  });
  return idx;
}

Language::Language(Domain domain, std::vector<NamedRelation> relations,
                   std::vector<NamedValuation> valuations)
    : domain_(std::move(domain)) {
  for (auto& r : relations) add_relation(std::move(r.relation), r.name, false);
  for (auto& v : valuations) add_valuation(std::move(v.valuation), v.name);
}

std::vector<Relation> Language::relations() const {
  std::vector<Relation> out;
  for (const auto& r : relations_) out.push_back(r.relation);
  return out;
}

std::vector<Valuation> Language::valuations() const {
  std::vector<Valuation> out;
  for (const auto& v : valuations_) out.push_back(v.valuation);
  return out;
}

std::optional<std::size_t> Language::find_relation(
    const std::string& name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Language::find_valuation(
    const std::string& name) const {
  for (std::size_t i = 0; i < valuations_.size(); ++i)
    if (valuations_[i].name == name) return i;
  return std::nullopt;
}

bool Language::has_relation(const Relation& r) const {
  return std::any_of(relations_.begin(), relations_.end(),
                     [&](const NamedRelation& n) { return n.relation == r; });
}

std::string Language::fresh_name(const std::string& stem) const {
  auto taken = [&](const std::string& n) {
    return find_relation(n).has_value() || find_valuation(n).has_value();
  };
  if (!stem.empty() && !taken(stem)) return stem;
  std::string base = stem.empty() ? "r" : stem;
  for (std::size_t i = relations_.size() + valuations_.size();; ++i) {
    std::string n = base + "_" + std::to_string(i);
    if (!taken(n)) return n;
  }
}

std::size_t Language::add_relation(Relation r, std::string name, bool dedupe) {
  if (r.domain_size() != domain_.size())
    throw ContractError("relation '" + name + "' is over a different domain");
  if (dedupe) {
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (relations_[i].relation == r) return i;
  }
  if (!dedupe && !name.empty() && find_relation(name))
    throw ContractError("duplicate relation name '" + name + "'");
  relations_.push_back({fresh_name(name), std::move(r)});
  return relations_.size() - 1;
}

std::size_t Language::add_valuation(Valuation v, std::string name) {
  if (v.domain_size() != domain_.size())
    throw ContractError("valuation '" + name + "' is not total on the domain");
  if (!name.empty() && find_valuation(name))
    throw ContractError("duplicate valuation name '" + name + "'");
  valuations_.push_back({name.empty() ? fresh_name("nu") : name, std::move(v)});
  return valuations_.size() - 1;
}

bool Language::is_conservative() const {
  std::size_t n = domain_.size();
  for (ValueSet s = 1; s <= full_set(n); ++s)
    if (!has_relation(Relation::unary(n, s))) return false;
  return true;
}

std::vector<Value> restriction_index(std::size_t n, ValueSet subset) {
  std::vector<Value> map(n, 0xff);
  Value next = 0;
  for (Value v = 0; v < n; ++v)
    if (has(subset, v)) map[v] = next++;
  return map;
}

Relation reindex(const Relation& r, std::size_t new_size,
                 const std::vector<Value>& map) {
  std::vector<Tuple> out;
  for (const auto& t : r.tuples()) {
    Tuple u;
    bool ok = true;
    for (Value v : t) {
      if (map[v] == 0xff) {
        ok = false;
        break;
      }
      u.push_back(map[v]);
    }
    if (ok) out.push_back(std::move(u));
  }
  return Relation(new_size, r.arity(), std::move(out));
}

Language restrict_language(const Language& lang, ValueSet subset) {
  std::size_t n = lang.domain_size();
  subset &= full_set(n);
  if (subset == 0) throw ContractError("restriction to an empty subset");
  auto map = restriction_index(n, subset);
  std::vector<std::string> labels;
  for (Value v : members(subset)) labels.push_back(lang.domain().label(v));
  std::size_t m = labels.size();
  std::vector<NamedRelation> rels;
  for (const auto& r : lang.named_relations())
    rels.push_back({r.name, reindex(r.relation, m, map)});
  std::vector<NamedValuation> vals;
  for (const auto& v : lang.named_valuations()) {
    std::vector<ExtRational> x;
    for (Value d : members(subset)) x.push_back(v.valuation(d));
    vals.push_back({v.name, Valuation(std::move(x))});
  }
  return Language(Domain(std::move(labels)), std::move(rels), std::move(vals));
}

Language with_constants(const Language& lang) {
  Language out = lang;
  for (Value c = 0; c < lang.domain_size(); ++c)
    out.add_relation(Relation::unary(lang.domain_size(), bit(c)),
                     "const_" + lang.domain().label(c));
  return out;
}

Language with_unaries(const Language& lang, const std::vector<ValueSet>& sets) {
  Language out = lang;
  for (ValueSet s : sets) out.add_relation(Relation::unary(lang.domain_size(), s));
  return out;
}

}  // namespace vcsp
