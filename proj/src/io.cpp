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

#include "vcsp/io.hpp"

#include <fstream>
#include <sstream>

#include "vcsp/errors.hpp"

namespace vcsp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Value label_value(const Json& j, const Domain& domain, const std::string& where) {
  std::string s = as_string(j, where);
  if (!domain.contains_label(s)) fail(where, "unknown domain label '" + s + "'");
  return domain.index_of(s);
}

}  // namespace

Json number_to_json(const ExtRational& q) {
  if (q.is_infinite()) return "inf";
  const Rational& v = q.value();
  if (is_integer(v) && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return to_string(v);
}

ExtRational number_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return ExtRational(Rational(j.get<long>()));
    if (j.is_string()) return parse_ext_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
  fail(where, "expected an integer, a \"p/q\" string or \"inf\"");
}

Relation relation_from_json(const Json& j, const Domain& domain,
                            const std::string& where) {
  const Json* tuples = &j;
  std::optional<std::size_t> arity;
  if (j.is_object()) {
    const Json& a = require(j, "arity", where);
    if (!a.is_number_unsigned() || a.get<std::size_t>() == 0)
      fail(where + "/arity", "expected a positive integer");
    arity = a.get<std::size_t>();
    tuples = &require(j, "tuples", where);
  }
  if (!tuples->is_array()) fail(where, "expected a list of tuples");
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < tuples->size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    const Json& t = (*tuples)[i];
    Tuple tup;
    if (t.is_string()) {
      tup.push_back(label_value(t, domain, at));
    } else if (t.is_array() && !t.empty()) {
      for (std::size_t k = 0; k < t.size(); ++k)
        tup.push_back(label_value(t[k], domain, at + "/" + std::to_string(k)));
    } else {
      fail(at, "expected a nonempty tuple of labels");
    }
    if (!arity) arity = tup.size();
    if (tup.size() != *arity)
      fail(at, "tuple length " + std::to_string(tup.size()) +
                   " differs from arity " + std::to_string(*arity));
    out.push_back(std::move(tup));
  }
  if (!arity) fail(where, "empty relation needs the {\"arity\", \"tuples\"} form");
  return Relation(domain.size(), *arity, std::move(out));
}

Json relation_to_json(const Relation& r, const Domain& domain) {
  Json tuples = Json::array();
  for (const auto& t : r.tuples()) {
    Json tj = Json::array();
    for (Value v : t) tj.push_back(domain.label(v));
    tuples.push_back(std::move(tj));
  }
  if (!r.empty()) return tuples;
  return Json{{"arity", r.arity()}, {"tuples", tuples}};
}

Json valuation_to_json(const Valuation& v, const Domain& domain) {
  Json j = Json::object();
  for (Value x = 0; x < domain.size(); ++x) j[domain.label(x)] = number_to_json(v(x));
  return j;
}

Json instance_to_json(const MinHomInstance& inst, const Language& lang) {
  Json j;
  j["variables"] = inst.names();
  Json cs = Json::array();
  for (const auto& c : inst.constraints()) {
    std::string name = c.relation_name;
    auto idx = lang.find_relation(name);
    if (!idx || !(lang.relation(*idx) == c.relation)) {
      name.clear();
      for (const auto& r : lang.named_relations())
        if (r.relation == c.relation) {
          name = r.name;
          break;
        }
    }
    if (name.empty())
      throw ContractError("constraint relation is not named in the language");
    Json scope = Json::array();
    for (Variable v : c.scope) scope.push_back(inst.name(v));
    cs.push_back(Json::array({name, scope}));
  }
  j["constraints"] = cs;
  Json ws = Json::array();
  for (const auto& w : inst.weights())
    ws.push_back(Json::array({inst.name(w.variable),
                              lang.named_valuations().at(w.valuation).name,
                              number_to_json(ExtRational(w.value))}));
  j["weights"] = ws;
  return j;
}

MinHomInstance instance_from_json(const Json& j, const Language& lang,
                                  const std::string& where) {
  const Json& vars = require(j, "variables", where);
  if (!vars.is_array()) fail(where + "/variables", "expected a list");
  MinHomInstance inst;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::string at = where + "/variables/" + std::to_string(i);
    std::string name = as_string(vars[i], at);
    if (name.empty()) fail(at, "empty variable name");
    try {
      inst.add_variable(name);
    } catch (const ContractError& e) {
      fail(at, e.what());
    }
  }
  auto var = [&](const Json& v, const std::string& at) {
    std::string name = as_string(v, at);
    try {
      return inst.variable(name);
    } catch (const ContractError&) {
      fail(at, "unknown variable '" + name + "'");
    }
  };
  if (j.contains("constraints")) {
    const Json& cs = j["constraints"];
    if (!cs.is_array()) fail(where + "/constraints", "expected a list");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string at = where + "/constraints/" + std::to_string(i);
      const Json& c = cs[i];
      if (!c.is_array() || c.size() != 2 || !c[1].is_array())
        fail(at, "expected [relation-name, [variables...]]");
      std::string rname = as_string(c[0], at + "/0");
      auto idx = lang.find_relation(rname);
      if (!idx) fail(at + "/0", "unknown relation '" + rname + "'");
      std::vector<Variable> scope;
      for (std::size_t k = 0; k < c[1].size(); ++k)
        scope.push_back(var(c[1][k], at + "/1/" + std::to_string(k)));
      try {
        inst.add_constraint(std::move(scope), lang.relation(*idx), rname);
      } catch (const ContractError& e) {
        fail(at, e.what());
      }
    }
  }
  if (j.contains("weights")) {
    const Json& ws = j["weights"];
    if (!ws.is_array()) fail(where + "/weights", "expected a list");
    for (std::size_t i = 0; i < ws.size(); ++i) {
      std::string at = where + "/weights/" + std::to_string(i);
      const Json& w = ws[i];
      if (!w.is_array() || w.size() != 3)
        fail(at, "expected [variable, valuation-name, value]");
      Variable v = var(w[0], at + "/0");
      std::string vname = as_string(w[1], at + "/1");
      auto idx = lang.find_valuation(vname);
      if (!idx) fail(at + "/1", "unknown valuation '" + vname + "'");
      ExtRational value = number_from_json(w[2], at + "/2");
      if (value.is_infinite()) fail(at + "/2", "weights must be finite");
      if (sgn(value.value()) < 0) fail(at + "/2", "weights must be nonnegative");
      inst.add_weight(v, *idx, value.value());
    }
  }
  return inst;
}

Document parse_document(const Json& j) {
  if (!j.is_object()) fail("/", "expected an object");
  const Json& dj = require(j, "domain", "");
  if (!dj.is_array()) fail("/domain", "expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dj.size(); ++i)
    labels.push_back(as_string(dj[i], "/domain/" + std::to_string(i)));
  Domain domain;
  try {
    domain = Domain(std::move(labels));
  } catch (const ContractError& e) {
    fail("/domain", e.what());
  }
  std::vector<NamedRelation> rels;
  if (j.contains("relations")) {
    const Json& rj = j["relations"];
    if (!rj.is_object()) fail("/relations", "expected an object");
    for (auto it = rj.begin(); it != rj.end(); ++it)
      rels.push_back(
          {it.key(), relation_from_json(it.value(), domain, "/relations/" + it.key())});
  }
  std::vector<NamedValuation> vals;
  if (j.contains("valuations")) {
    const Json& vj = j["valuations"];
    if (!vj.is_object()) fail("/valuations", "expected an object");
    for (auto it = vj.begin(); it != vj.end(); ++it) {
      std::string at = "/valuations/" + it.key();
      if (!it.value().is_object()) fail(at, "expected label -> value");
      std::vector<ExtRational> values;
      for (Value x = 0; x < domain.size(); ++x) {
        const std::string& l = domain.label(x);
        if (!it.value().contains(l)) fail(at, "missing value for '" + l + "'");
        values.push_back(number_from_json(it.value()[l], at + "/" + l));
      }
      for (auto kv = it.value().begin(); kv != it.value().end(); ++kv)
        if (!domain.contains_label(kv.key()))
          fail(at, "unknown domain label '" + kv.key() + "'");
      try {
        vals.push_back({it.key(), Valuation(std::move(values))});
      } catch (const ContractError& e) {
        fail(at, e.what());
      }
    }
  }
  Document doc;
  try {
    doc.language = Language(domain, std::move(rels), std::move(vals));
  } catch (const ContractError& e) {
    fail("/", e.what());
  }
  if (j.contains("instances")) {
    const Json& ij = j["instances"];
    if (!ij.is_object()) fail("/instances", "expected an object");
    for (auto it = ij.begin(); it != ij.end(); ++it)
      doc.instances.emplace_back(
          it.key(),
          instance_from_json(it.value(), doc.language, "/instances/" + it.key()));
  }
  return doc;
}

Document parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON syntax: ") + e.what());
  }
  return parse_document(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load_document(const std::string& path) {
  try {
    return parse_document_text(read_file(path));
  } catch (const ParseError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + e.what());
  }
}

Json language_to_json(const Language& lang) {
  Json j;
  j["domain"] = lang.domain().labels();
  Json rels = Json::object();
  for (const auto& r : lang.named_relations())
    rels[r.name] = relation_to_json(r.relation, lang.domain());
  j["relations"] = rels;
  Json vals = Json::object();
  for (const auto& v : lang.named_valuations())
    vals[v.name] = valuation_to_json(v.valuation, lang.domain());
  j["valuations"] = vals;
  return j;
}

Json to_json(const Document& doc) {
  Json j = language_to_json(doc.language);
  Json insts = Json::object();
  for (const auto& [name, inst] : doc.instances)
    insts[name] = instance_to_json(inst, doc.language);
  j["instances"] = insts;
  return j;
}

}  // namespace vcsp
