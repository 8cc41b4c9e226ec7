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

#include <map>

#include "vcsp/classify.hpp"
#include "vcsp/errors.hpp"

namespace vcsp {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& need(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json* maybe(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string str(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

const Json& list(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list");
  return j;
}

Value value_of(const Json& j, const Domain& d, const std::string& where) {
  std::string s = str(j, where);
  if (!d.contains_label(s)) fail(where, "unknown label '" + s + "'");
  return d.index_of(s);
}

Json labels(const std::vector<Value>& vs, const Domain& d) {
  Json j = Json::array();
  for (Value v : vs) j.push_back(d.label(v));
  return j;
}

std::vector<Value> values_of(const Json& j, const Domain& d, const std::string& where) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < list(j, where).size(); ++i)
    out.push_back(value_of(j[i], d, where + "/" + std::to_string(i)));
  return out;
}

Json set_json(ValueSet s, const Domain& d) { return labels(members(s), d); }

ValueSet set_of(const Json& j, const Domain& d, const std::string& where) {
  ValueSet s = 0;
  for (Value v : values_of(j, d, where)) s |= bit(v);
  return s;
}

Json pair_json(Pair p, const Domain& d) { return labels({p.first, p.second}, d); }

Pair pair_of(const Json& j, const Domain& d, const std::string& where) {
  auto v = values_of(j, d, where);
  if (v.size() != 2) fail(where, "expected a pair");
  return {v[0], v[1]};
}

Json pairs_json(const std::vector<Pair>& ps, const Domain& d) {
  Json j = Json::array();
  for (Pair p : ps) j.push_back(pair_json(p, d));
  return j;
}

std::vector<Pair> pairs_of(const Json& j, const Domain& d, const std::string& where) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < list(j, where).size(); ++i)
    out.push_back(pair_of(j[i], d, where + "/" + std::to_string(i)));
  return out;
}

Json op_json(const Operation& f, const Domain& d) { return labels(f.table(), d); }

Operation op_of(const Json& j, const Domain& d, std::size_t arity, const std::string& where) {
  auto t = values_of(j, d, where);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < arity; ++i) cells *= d.size();
  if (t.size() != cells)
    fail(where, "expected " + std::to_string(cells) + " table entries, got " +
                    std::to_string(t.size()));
  return Operation(d.size(), arity, t);
}

Json fpol_json(const FractionalPolymorphism& w, const Domain& d) {
  Json j = Json::array();
  for (const auto& [f, q] : w.weights)
    j.push_back(Json{{"operation", op_json(f, d)}, {"weight", number_to_json(ExtRational(q))}});
  return j;
}

FractionalPolymorphism fpol_of(const Json& j, const Domain& d, const std::string& where,
                               std::size_t arity = 2) {
  std::vector<std::pair<Operation, Rational>> ws;
  for (std::size_t i = 0; i < list(j, where).size(); ++i) {
    std::string at = where + "/" + std::to_string(i);
    ExtRational q = number_from_json(need(j[i], "weight", at), at + "/weight");
    if (!q.is_finite()) fail(at, "infinite weight");
    if (q <= ExtRational(0)) fail(at, "weight must be positive");
    ws.emplace_back(op_of(need(j[i], "operation", at), d, arity, at + "/operation"), q.value());
  }
  FractionalPolymorphism w;
  w.arity = arity;
  w.weights = std::move(ws);
  return w;
}

Json witness_json(const TypeWitness& tw, const Domain& d) {
  Json j;
  j["type"] = type_name(tw);
  if (const auto* g = std::get_if<GmcWitness>(&tw)) {
    j["f"] = op_json(g->f, d);
  } else if (const auto* b = std::get_if<BsmWitness>(&tw)) {
    j["a"] = d.label(b->a);
    j["b"] = d.label(b->b);
    j["c"] = d.label(b->c);
    j["meet"] = op_json(b->meet, d);
    j["join"] = op_json(b->join, d);
  } else {
    const auto& w = std::get<GwtpWitness>(tw);
    j["A"] = pairs_json(w.A, d);
    j["B"] = pairs_json(w.B, d);
    j["f1"] = op_json(w.f1, d);
    j["f2"] = op_json(w.f2, d);
    j["m"] = op_json(w.m, d);
    Json es = Json::array();
    for (const auto& e : w.eliminations)
      es.push_back(Json{{"a", d.label(e.a)}, {"b", d.label(e.b)}, {"fpol", fpol_json(e.fpol, d)}});
    j["eliminations"] = es;
    Json ss = Json::array();
    for (const auto& s : w.subsets)
      ss.push_back(Json{{"subset", set_json(s.subset, d)},
                        {"elimination", s.elimination ? Json(*s.elimination) : Json()}});
    j["subsets"] = ss;
  }
  return j;
}

TypeWitness witness_of(const Json& j, const Domain& d, const std::string& where) {
  std::string type = str(need(j, "type", where), where + "/type");
  if (type == "GMC") return GmcWitness{op_of(need(j, "f", where), d, 2, where + "/f")};
  if (type == "BSM") {
    BsmWitness b;
    b.a = value_of(need(j, "a", where), d, where + "/a");
    b.b = value_of(need(j, "b", where), d, where + "/b");
    b.c = value_of(need(j, "c", where), d, where + "/c");
    b.meet = op_of(need(j, "meet", where), d, 2, where + "/meet");
    b.join = op_of(need(j, "join", where), d, 2, where + "/join");
    return b;
  }
  if (type != "GWTP") fail(where + "/type", "unknown witness type '" + type + "'");
  GwtpWitness w;
  w.A = pairs_of(need(j, "A", where), d, where + "/A");
  w.B = pairs_of(need(j, "B", where), d, where + "/B");
  w.f1 = op_of(need(j, "f1", where), d, 2, where + "/f1");
  w.f2 = op_of(need(j, "f2", where), d, 2, where + "/f2");
  w.m = op_of(need(j, "m", where), d, 3, where + "/m");
  const Json& es = list(need(j, "eliminations", where), where + "/eliminations");
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string at = where + "/eliminations/" + std::to_string(i);
    w.eliminations.push_back({value_of(need(es[i], "a", at), d, at + "/a"),
                              value_of(need(es[i], "b", at), d, at + "/b"),
                              fpol_of(need(es[i], "fpol", at), d, at + "/fpol")});
  }
  const Json& ss = list(need(j, "subsets", where), where + "/subsets");
  for (std::size_t i = 0; i < ss.size(); ++i) {
    std::string at = where + "/subsets/" + std::to_string(i);
    SubsetElimination s{set_of(need(ss[i], "subset", at), d, at + "/subset"), std::nullopt};
    if (const Json* e = maybe(ss[i], "elimination")) {
      if (!e->is_number_unsigned()) fail(at + "/elimination", "expected an index");
      s.elimination = e->get<std::size_t>();
    }
    w.subsets.push_back(s);
  }
  return w;
}

Language language_of(const Json& j, const std::string& where) {
  try {
    Document doc = parse_document(j);
    if (!doc.instances.empty()) fail(where, "unexpected instances");
    return doc.language;
  } catch (const ParseError& e) {
    fail(where, e.what());
  } catch (const ContractError& e) {
    fail(where, e.what());
  }
}

Valuation valuation_of(const Json& j, const Domain& d, const std::string& where) {
  if (!j.is_object() || j.size() != d.size()) fail(where, "expected one value per label");
  std::vector<ExtRational> vs;
  for (Value x = 0; x < d.size(); ++x)
    vs.push_back(number_from_json(need(j, d.label(x).c_str(), where), where + "/" + d.label(x)));
  return Valuation(vs);
}

PairOperationKind kind_of(const std::string& s, const std::string& where) {
  for (auto k : {PairOperationKind::kSemilattice, PairOperationKind::kMajority,
                 PairOperationKind::kMinority})
    if (to_string(k) == s) return k;
  fail(where, "unknown kind '" + s + "'");
}

Verdict verdict_of(const std::string& s, const std::string& where) {
  for (auto v : {Verdict::kPO, Verdict::kNPHard, Verdict::kUnsupported})
    if (to_string(v) == s) return v;
  fail(where, "unknown verdict '" + s + "'");
}

// The language a gadget instance is read against.
Language gadget_language(const Language& base, const GadgetCheck& g,
                         const std::map<std::string, Relation>& earlier) {
  Language l = base;
  for (const auto& u : g.uses) {
    auto it = earlier.find(u);
    if (it == earlier.end()) throw ParseError("gadget " + g.name + " uses unknown " + u);
    l.add_relation(it->second, u, false);
  }
  return l;
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  const Domain& in = cert.language.domain();
  const Domain& dc = cert.min_core ? cert.min_core->core.domain() : in;
  const Domain& wd = cert.problem == "minsol3" ? dc : in;
  Json j;
  j["schema_version"] = cert.schema_version;
  j["problem"] = cert.problem;
  j["verdict"] = to_string(cert.verdict);
  j["explanation"] = cert.explanation;
  j["language"] = language_to_json(cert.language);
  if (cert.min_core) {
    Json chain = Json::array();
    for (const auto& s : cert.min_core->chain)
      chain.push_back(Json{{"domain", s.domain.labels()}, {"map", op_json(s.map, s.domain)}});
    j["min_core"] = Json{{"chain", chain},
                         {"core", language_to_json(cert.min_core->core)},
                         {"embedding", labels(cert.min_core->embedding, in)}};
  }
  Json us = Json::array();
  for (ValueSet s : cert.unaries) us.push_back(set_json(s, wd));
  j["unaries"] = us;
  Json search = Json::array();
  for (const auto& st : cert.search) {
    Json u = Json::array();
    for (ValueSet s : st.unaries) u.push_back(set_json(s, dc));
    search.push_back(Json{{"unaries", u}, {"csp", st.csp}, {"gwtp", st.gwtp ? Json(*st.gwtp) : Json()}});
  }
  j["search"] = search;
  j["witness"] = cert.witness ? witness_json(*cert.witness, wd) : Json();
  j["siggers"] = cert.siggers ? op_json(*cert.siggers, dc) : Json();
  Json po = Json::array();
  for (const auto& p : cert.pair_operations)
    po.push_back(Json{{"pair", pair_json(p.pair, in)},
                      {"kind", to_string(p.kind)},
                      {"operation", op_json(p.op, in)}});
  j["pair_operations"] = po;
  if (cert.analysis) {
    const auto& an = *cert.analysis;
    Json edges = Json::array();
    for (const auto& [u, v] : an.edges) edges.push_back(Json::array({pair_json(u, in), pair_json(v, in)}));
    Json a{{"B", pairs_json(an.B, in)}, {"A", pairs_json(an.A, in)}, {"M", pairs_json(an.M, in)},
           {"edges", edges}};
    a["side"] = an.side;
    a["odd_cycle"] = pairs_json(an.odd_cycle, in);
    j["analysis"] = a;
  } else {
    j["analysis"] = Json();
  }
  if (cert.hardness) {
    Json absent = Json::array();
    for (const auto& c : cert.hardness->absent) {
      const Domain& d = c.base == "core" ? dc : in;
      absent.push_back(Json{{"kind", c.kind}, {"base", c.base}, {"values", labels(c.values, d)}});
    }
    Json gadgets = Json::array();
    std::map<std::string, Relation> earlier;
    for (const auto& g : cert.hardness->gadgets) {
      const Language& base = g.base == "core" && cert.min_core ? cert.min_core->core : cert.language;
      Language l = gadget_language(base, g, earlier);
      Json out = Json::array();
      for (Variable v : g.output) out.push_back(g.instance.name(v));
      Json gj{{"name", g.name},
              {"base", g.base},
              {"uses", g.uses},
              {"instance", instance_to_json(g.instance, l)},
              {"output", out},
              {"relation", relation_to_json(g.relation, l.domain())}};
      gj["expresses"] = g.expresses ? valuation_to_json(*g.expresses, l.domain()) : Json();
      gj["note"] = g.note;
      gadgets.push_back(gj);
      earlier.emplace(g.name, g.relation);
    }
    j["hardness"] = Json{{"absent", absent}, {"gadgets", gadgets}};
  } else {
    j["hardness"] = Json();
  }
  Json checks = Json::array();
  for (const auto& c : cert.checks)
    checks.push_back(Json{{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  const std::string w = "certificate";
  Certificate cert;
  const Json& sv = need(j, "schema_version", w);
  if (!sv.is_number_integer()) fail(w + "/schema_version", "expected an integer");
  cert.schema_version = sv.get<int>();
  cert.problem = str(need(j, "problem", w), w + "/problem");
  if (cert.problem != "minsol3" && cert.problem != "conservative")
    fail(w + "/problem", "unknown problem '" + cert.problem + "'");
  cert.verdict = verdict_of(str(need(j, "verdict", w), w + "/verdict"), w + "/verdict");
  cert.explanation = str(need(j, "explanation", w), w + "/explanation");
  cert.language = language_of(need(j, "language", w), w + "/language");
  const Domain& in = cert.language.domain();
  if (const Json* mc = maybe(j, "min_core")) {
    std::string at = w + "/min_core";
    MinCoreResult r;
    const Json& chain = list(need(*mc, "chain", at), at + "/chain");
    for (std::size_t i = 0; i < chain.size(); ++i) {
      std::string ct = at + "/chain/" + std::to_string(i);
      const Json& dj = list(need(chain[i], "domain", ct), ct + "/domain");
      std::vector<std::string> ls;
      for (std::size_t k = 0; k < dj.size(); ++k) ls.push_back(str(dj[k], ct + "/domain"));
      Domain d;
      try {
        d = Domain(ls);
      } catch (const ContractError& e) {
        fail(ct + "/domain", e.what());
      }
      r.chain.push_back({d, op_of(need(chain[i], "map", ct), d, 1, ct + "/map")});
    }
    r.core = language_of(need(*mc, "core", at), at + "/core");
    r.embedding = values_of(need(*mc, "embedding", at), in, at + "/embedding");
    cert.min_core = r;
  }
  const Domain& dc = cert.min_core ? cert.min_core->core.domain() : in;
  const Domain& wd = cert.problem == "minsol3" ? dc : in;
  const Json& us = list(need(j, "unaries", w), w + "/unaries");
  for (std::size_t i = 0; i < us.size(); ++i)
    cert.unaries.push_back(set_of(us[i], wd, w + "/unaries/" + std::to_string(i)));
  const Json& search = list(need(j, "search", w), w + "/search");
  for (std::size_t i = 0; i < search.size(); ++i) {
    std::string at = w + "/search/" + std::to_string(i);
    UnarySearchStep st;
    const Json& u = list(need(search[i], "unaries", at), at + "/unaries");
    for (std::size_t k = 0; k < u.size(); ++k) st.unaries.push_back(set_of(u[k], dc, at + "/unaries"));
    const Json& csp = need(search[i], "csp", at);
    if (!csp.is_boolean()) fail(at + "/csp", "expected a boolean");
    st.csp = csp.get<bool>();
    if (const Json* g = maybe(search[i], "gwtp")) {
      if (!g->is_boolean()) fail(at + "/gwtp", "expected a boolean");
      st.gwtp = g->get<bool>();
    }
    cert.search.push_back(st);
  }
  if (const Json* wj = maybe(j, "witness")) cert.witness = witness_of(*wj, wd, w + "/witness");
  if (const Json* s = maybe(j, "siggers")) cert.siggers = op_of(*s, dc, 4, w + "/siggers");
  const Json& po = list(need(j, "pair_operations", w), w + "/pair_operations");
  for (std::size_t i = 0; i < po.size(); ++i) {
    std::string at = w + "/pair_operations/" + std::to_string(i);
    PairOperation p;
    p.pair = pair_of(need(po[i], "pair", at), in, at + "/pair");
    p.kind = kind_of(str(need(po[i], "kind", at), at + "/kind"), at + "/kind");
    p.op = op_of(need(po[i], "operation", at), in, p.kind == PairOperationKind::kSemilattice ? 2 : 3,
                 at + "/operation");
    cert.pair_operations.push_back(p);
  }
  if (const Json* a = maybe(j, "analysis")) {
    std::string at = w + "/analysis";
    ConservativeAnalysis an;
    an.B = pairs_of(need(*a, "B", at), in, at + "/B");
    an.A = pairs_of(need(*a, "A", at), in, at + "/A");
    an.M = pairs_of(need(*a, "M", at), in, at + "/M");
    const Json& edges = list(need(*a, "edges", at), at + "/edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto e = pairs_of(edges[i], in, at + "/edges/" + std::to_string(i));
      if (e.size() != 2) fail(at + "/edges/" + std::to_string(i), "expected two vertices");
      an.edges.push_back({e[0], e[1]});
    }
    const Json& side = list(need(*a, "side", at), at + "/side");
    for (const auto& s : side) {
      if (!s.is_number_integer() || (s.get<int>() != 0 && s.get<int>() != 1))
        fail(at + "/side", "expected 0 or 1");
      an.side.push_back(s.get<int>());
    }
    an.odd_cycle = pairs_of(need(*a, "odd_cycle", at), in, at + "/odd_cycle");
    cert.analysis = an;
  }
  if (const Json* h = maybe(j, "hardness")) {
    std::string at = w + "/hardness";
    HardnessEvidence ev;
    const Json& absent = list(need(*h, "absent", at), at + "/absent");
    for (std::size_t i = 0; i < absent.size(); ++i) {
      std::string ct = at + "/absent/" + std::to_string(i);
      AbsenceClaim c;
      c.kind = str(need(absent[i], "kind", ct), ct + "/kind");
      c.base = str(need(absent[i], "base", ct), ct + "/base");
      if (c.base != "input" && c.base != "core") fail(ct + "/base", "unknown base");
      c.values = values_of(need(absent[i], "values", ct), c.base == "core" ? dc : in, ct + "/values");
      ev.absent.push_back(c);
    }
    const Json& gadgets = list(need(*h, "gadgets", at), at + "/gadgets");
    std::map<std::string, Relation> earlier;
    for (std::size_t i = 0; i < gadgets.size(); ++i) {
      std::string ct = at + "/gadgets/" + std::to_string(i);
      const Json& gj = gadgets[i];
      GadgetCheck g;
      g.name = str(need(gj, "name", ct), ct + "/name");
      g.base = str(need(gj, "base", ct), ct + "/base");
      if (g.base != "input" && (g.base != "core" || !cert.min_core)) fail(ct + "/base", "unknown base");
      for (const auto& u : list(need(gj, "uses", ct), ct + "/uses")) g.uses.push_back(str(u, ct + "/uses"));
      const Language& base = g.base == "core" ? cert.min_core->core : cert.language;
      Language l;
      try {
        l = gadget_language(base, g, earlier);
      } catch (const ParseError& e) {
        fail(ct, e.what());
      }
      try {
        g.instance = instance_from_json(need(gj, "instance", ct), l, ct + "/instance");
        for (const auto& v : list(need(gj, "output", ct), ct + "/output"))
          g.output.push_back(g.instance.variable(str(v, ct + "/output")));
      } catch (const ContractError& e) {
        fail(ct, e.what());
      }
      g.relation = relation_from_json(need(gj, "relation", ct), l.domain(), ct + "/relation");
      if (const Json* e = maybe(gj, "expresses")) g.expresses = valuation_of(*e, l.domain(), ct + "/expresses");
      g.note = str(need(gj, "note", ct), ct + "/note");
      earlier.emplace(g.name, g.relation);
      ev.gadgets.push_back(std::move(g));
    }
    cert.hardness = ev;
  }
  const Json& checks = list(need(j, "checks", w), w + "/checks");
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string ct = w + "/checks/" + std::to_string(i);
    const Json& ok = need(checks[i], "ok", ct);
    if (!ok.is_boolean()) fail(ct + "/ok", "expected a boolean");
    cert.checks.push_back({str(need(checks[i], "name", ct), ct + "/name"), ok.get<bool>(),
                           str(need(checks[i], "detail", ct), ct + "/detail")});
  }
  return cert;
}

CertificateVerification verify_certificate(const Json& j, const ClassifyOptions& opts) {
  CertificateVerification v;
  Certificate cert;
  try {
    cert = certificate_from_json(j);
  } catch (const std::exception& e) {
    v.failures.push_back(std::string("parse: ") + e.what());
    return v;
  }
  try {
    v.checks = run_checks(cert, opts);
  } catch (const std::exception& e) {
    v.failures.push_back(std::string("checks: ") + e.what());
    return v;
  }
  for (const auto& c : v.checks)
    if (!c.ok) v.failures.push_back("check " + c.name + ": " + c.detail);
  bool same = v.checks.size() == cert.checks.size();
  for (std::size_t i = 0; same && i < v.checks.size(); ++i)
    same = v.checks[i].name == cert.checks[i].name && v.checks[i].ok == cert.checks[i].ok;
  if (!same) v.failures.push_back("recorded check results differ from the recomputed ones");
  try {
    Certificate again = cert.problem == "minsol3" ? classify_minsol3(cert.language, opts)
                                                  : classify_conservative(cert.language, opts);
    v.rederived = certificate_to_json(again).dump() == j.dump();
  } catch (const std::exception& e) {
    v.failures.push_back(std::string("re-derivation: ") + e.what());
  }
  if (!v.rederived) v.failures.push_back("classifying the language again gives a different certificate");
  v.ok = v.failures.empty();
  return v;
}

Json fpol_to_json(const FractionalPolymorphism& w, const Domain& d) { return fpol_json(w, d); }

FractionalPolymorphism fpol_from_json(const Json& j, const Domain& d, std::size_t arity) {
  return fpol_of(j, d, "fpol", arity);
}

}  // namespace vcsp
