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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vcsp/classify.hpp"
#include "vcsp/csp.hpp"
#include "vcsp/errors.hpp"
#include "vcsp/fpol.hpp"
#include "vcsp/gwtp_solver.hpp"
#include "vcsp/io.hpp"
#include "vcsp/mincore.hpp"
#include "vcsp/ppdef.hpp"
#include "vcsp/types.hpp"

namespace {

using namespace vcsp;

constexpr int kExitCheckFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitContract = 3;
constexpr int kExitResource = 4;

struct Flags {
  std::string json_path;
  std::uint64_t budget = 0;
  std::size_t max_arity = 0;
  std::uint64_t seed = 0;
};

FindOptions find_options(const Flags& f) {
  FindOptions o;
  if (f.max_arity) o.max_arity = f.max_arity;
  if (f.budget) o.search.max_nodes = f.budget;
  return o;
}

ClassifyOptions classify_options(const Flags& f) {
  ClassifyOptions o;
  o.gwtp.fpol.find = find_options(f);
  if (f.budget) o.gwtp.fpol.budget = f.budget;
  return o;
}

void write_json(const Flags& f, const Json& j) {
  if (f.json_path.empty()) return;
  std::ofstream out(f.json_path, std::ios::binary);
  if (!out) throw ContractError(f.json_path + ": cannot write");
  out << j.dump(2) << '\n';
}

std::string labels(ValueSet s, const Domain& d) {
  std::string out = "{";
  for (Value v : members(s)) out += (out.size() > 1 ? "," : "") + d.label(v);
  return out + "}";
}

int print_certificate(const Certificate& c, const Flags& f) {
  std::cout << "verdict: " << to_string(c.verdict) << '\n';
  std::cout << "explanation: " << c.explanation << '\n';
  if (c.min_core)
    std::cout << "min-core: " << c.min_core->core.domain_size() << " of "
              << c.language.domain_size() << " elements\n";
  if (!c.unaries.empty()) {
    std::cout << "unary sets:";
    for (ValueSet s : c.unaries) std::cout << ' ' << labels(s, c.language.domain());
    std::cout << '\n';
  }
  if (c.witness) std::cout << "witness: " << type_name(*c.witness) << '\n';
  if (c.hardness)
    std::cout << "hardness: " << c.hardness->absent.size() << " absence claims, "
              << c.hardness->gadgets.size() << " gadgets\n";
  std::size_t bad = 0;
  for (const auto& ch : c.checks) bad += !ch.ok;
  std::cout << "checks: " << c.checks.size() - bad << "/" << c.checks.size() << " passed\n";
  write_json(f, certificate_to_json(c));
  return bad ? kExitCheckFailed : 0;
}

std::vector<std::pair<std::string, MinHomInstance>> selected(const Document& doc,
                                                             const std::string& name) {
  if (name.empty()) return doc.instances;
  for (const auto& p : doc.instances)
    if (p.first == name) return {p};
  throw ContractError("no instance named '" + name + "'");
}

Json result_json(const SolveResult& r, const MinHomInstance& inst, const Language& lang) {
  Json j{{"satisfiable", r.satisfiable}};
  if (!r.satisfiable) return j;
  j["optimum"] = number_to_json(r.optimum);
  if (!r.optimal_assignments.empty()) {
    Json a = Json::object();
    for (Variable v = 0; v < inst.num_variables(); ++v)
      a[inst.name(v)] = lang.domain().label(r.optimal_assignments[0][v]);
    j["assignment"] = a;
  }
  return j;
}

void print_result(const std::string& name, const SolveResult& r, const Language& lang) {
  std::cout << name << ": ";
  if (!r.satisfiable) {
    std::cout << "unsatisfiable\n";
    return;
  }
  std::cout << "optimum " << to_string(r.optimum);
  if (!r.optimal_assignments.empty())
    std::cout << " at " << to_string(r.optimal_assignments[0], lang.domain());
  std::cout << '\n';
}

int cmd_solve(const std::string& path, const std::string& instance, const Flags& f) {
  Document doc = load_document(path);
  SearchOptions search = find_options(f).search;
  Json out = Json::object();
  for (const auto& [name, inst] : selected(doc, instance)) {
    inst.check(doc.language);
    auto opt = optimize(model_from_instance(inst, doc.language.domain_size()),
                        unary_costs(doc.language, inst), 1, search);
    SolveResult r{opt.satisfiable, opt.optimum, opt.optimal, opt.truncated};
    print_result(name, r, doc.language);
    out[name] = result_json(r, inst, doc.language);
  }
  write_json(f, Json{{"instances", out}});
  return 0;
}

int cmd_solve_gwtp(const std::string& path, const std::string& instance, const Flags& f) {
  Document doc = load_document(path);
  auto search = is_gwtp(doc.language, classify_options(f).gwtp);
  if (!search.witness) throw ContractError("the language is not of type GWTP: " + search.reason);
  Json out = Json::object();
  for (const auto& [name, inst] : selected(doc, instance)) {
    auto r = gwtp_solve(doc.language, *search.witness, inst, find_options(f).search);
    print_result(name, r.result, doc.language);
    std::cout << "  eliminations: " << r.trace.steps.size() << " (bound " << r.trace.bound << ")\n";
    Json j = result_json(r.result, inst, doc.language);
    j["trace"] = trace_to_json(r.trace, inst, doc.language.domain());
    out[name] = j;
  }
  write_json(f, Json{{"instances", out}});
  return 0;
}

int cmd_mincore(const std::string& path, const Flags& f) {
  Document doc = load_document(path);
  auto mc = min_core(doc.language, find_options(f));
  const Domain& d = doc.language.domain();
  std::cout << "min-core domain:";
  Json emb = Json::array();
  for (Value v : mc.embedding) {
    std::cout << ' ' << d.label(v);
    emb.push_back(d.label(v));
  }
  std::cout << "\nretractions: " << mc.chain.size() << '\n';
  write_json(f, Json{{"core", language_to_json(mc.core)}, {"embedding", emb}});
  return 0;
}

int cmd_ppdef(const std::string& path, const std::string& relation, const Flags& f) {
  Document doc = load_document(path);
  auto idx = doc.language.find_relation(relation);
  if (!idx) throw ContractError("no relation named '" + relation + "'");
  std::vector<Relation> gamma;
  for (std::size_t i = 0; i < doc.language.named_relations().size(); ++i)
    if (i != *idx) gamma.push_back(doc.language.relation(i));
  const Relation& r = doc.language.relation(*idx);
  auto res = pp_definable(gamma, r, find_options(f));
  const Domain& d = doc.language.domain();
  std::cout << relation << (res.definable ? " is" : " is not")
            << " pp-definable from the other relations\n";
  Json j{{"relation", relation}, {"definable", res.definable}};
  if (res.violating) {
    Json t = Json::array();
    for (Value v : res.violating->table()) t.push_back(d.label(v));
    j["violating_polymorphism"] = Json{{"arity", res.violating->arity()}, {"table", t}};
    std::cout << "violating polymorphism of arity " << res.violating->arity() << '\n';
  }
  write_json(f, j);
  return 0;
}

int cmd_fpol_check(const std::string& path, const std::string& fpol_path, std::size_t arity,
                   const Flags& f) {
  Document doc = load_document(path);
  Json fj;
  try {
    fj = Json::parse(read_file(fpol_path));
  } catch (const Json::parse_error& e) {
    throw ParseError(fpol_path + ": " + e.what());
  }
  auto w = fpol_from_json(fj, doc.language.domain(), arity);
  auto check = validate_fpol(doc.language, w);
  std::cout << (check.ok ? "valid fractional polymorphism\n" : "invalid: " + check.reason + "\n");
  Json j{{"valid", check.ok}, {"reason", check.reason}};
  if (arity == 2) {
    Json dom = Json::array();
    const Domain& d = doc.language.domain();
    for (Value a = 0; a < d.size(); ++a)
      for (Value b = 0; b < d.size(); ++b)
        if (a != b && check.ok && is_dominating(w, a, b)) {
          dom.push_back(Json::array({d.label(a), d.label(b)}));
          std::cout << "(" << d.label(a) << "," << d.label(b) << ")-dominating\n";
        }
    j["dominating"] = dom;
  }
  write_json(f, j);
  return check.ok ? 0 : kExitCheckFailed;
}

int cmd_define(const std::string& path, const std::string& instance,
               const std::vector<std::string>& vars, const Flags& f) {
  Document doc = load_document(path);
  auto inst = selected(doc, instance).at(0).second;
  inst.check(doc.language);
  std::vector<Variable> out;
  for (const auto& v : vars) out.push_back(inst.variable(v));
  Relation r = optimal_projection(doc.language, inst, out, find_options(f).search);
  Json j = relation_to_json(r, doc.language.domain());
  std::cout << j.dump() << '\n';
  write_json(f, Json{{"relation", j}});
  return 0;
}

int cmd_pol(const std::string& path, std::size_t arity, std::size_t limit, bool idempotent,
            bool conservative, const Flags& f) {
  Document doc = load_document(path);
  OperationConstraint c;
  c.domain_size = doc.language.domain_size();
  c.arity = arity;
  c.idempotent = idempotent;
  c.conservative = conservative;
  auto ops = find_operations(doc.language.relations(), c, limit, find_options(f));
  const Domain& d = doc.language.domain();
  Json list = Json::array();
  for (const auto& op : ops.operations) {
    Json t = Json::array();
    std::string line;
    for (Value v : op.table()) {
      t.push_back(d.label(v));
      line += d.label(v) + " ";
    }
    list.push_back(t);
    std::cout << line << '\n';
  }
  std::cout << ops.operations.size() << " polymorphisms" << (ops.truncated ? " (truncated)" : "")
            << '\n';
  write_json(f, Json{{"arity", arity}, {"operations", list}, {"truncated", ops.truncated}});
  return 0;
}

int cmd_verify(const std::string& path, const Flags& f) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  auto v = verify_certificate(j, classify_options(f));
  for (const auto& ch : v.checks)
    std::cout << (ch.ok ? "ok   " : "FAIL ") << ch.name << (ch.ok ? "" : ": " + ch.detail) << '\n';
  for (const auto& msg : v.failures) std::cout << "failure: " << msg << '\n';
  std::cout << (v.ok ? "certificate verified\n" : "certificate rejected\n");
  return v.ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Valued constraint languages: classification, solving and certificates"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Flags flags;
  app.add_option("--json", flags.json_path, "Write the JSON result or certificate here");
  app.add_option("--budget", flags.budget, "Search node and enumeration budget");
  app.add_option("--max-arity", flags.max_arity, "Largest polymorphism arity searched");
  app.add_option("--seed", flags.seed, "Seed for randomized harnesses; commands are deterministic");

  std::string file, second, instance;
  std::vector<std::string> vars;
  std::size_t arity = 2, limit = 100;
  bool idempotent = false, conservative = false;
  int status = 0;

  auto with_file = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Language document")->required();
    return sub;
  };
  auto* c3 = with_file("classify-minsol3", "Three-element MinSol dichotomy");
  auto* cc = with_file("classify-conservative", "Conservative MinHom dichotomy");
  auto* solve = with_file("solve", "Exact optimisation of the document's instances");
  solve->add_option("--instance", instance, "Only this instance");
  auto* sg = with_file("solve-gwtp", "Solve through the weak tournament pair reduction");
  sg->add_option("--instance", instance, "Only this instance");
  auto* mc = with_file("mincore", "Compute the min-core");
  auto* pp = with_file("ppdef", "Is a relation pp-definable from the others?");
  pp->add_option("relation", second, "Relation name")->required();
  auto* fc = with_file("fpol-check", "Validate a fractional polymorphism");
  fc->add_option("fpol", second, "JSON list of {operation, weight}")->required();
  fc->add_option("--arity", arity, "Arity of the operations");
  auto* vc = app.add_subcommand("verify-certificate", "Re-check an emitted certificate");
  vc->add_option("certificate", file, "Certificate JSON")->required();
  auto* df = with_file("define", "Optimal projection of an instance");
  df->add_option("--instance", instance, "Instance name")->required();
  df->add_option("--vars", vars, "Output variables")->required()->delimiter(',');
  auto* pol = with_file("pol", "List polymorphisms");
  pol->add_option("--arity", arity, "Arity");
  pol->add_option("--limit", limit, "At most this many");
  pol->add_flag("--idempotent", idempotent);
  pol->add_flag("--conservative", conservative);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*c3) status = print_certificate(classify_minsol3(load_document(file).language, classify_options(flags)), flags);
    if (*cc) status = print_certificate(classify_conservative(load_document(file).language, classify_options(flags)), flags);
    if (*solve) status = cmd_solve(file, instance, flags);
    if (*sg) status = cmd_solve_gwtp(file, instance, flags);
    if (*mc) status = cmd_mincore(file, flags);
    if (*pp) status = cmd_ppdef(file, second, flags);
    if (*fc) status = cmd_fpol_check(file, second, arity, flags);
    if (*vc) status = cmd_verify(file, flags);
    if (*df) status = cmd_define(file, instance, vars, flags);
    if (*pol) status = cmd_pol(file, arity, limit, idempotent, conservative, flags);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ContractError& e) {
    std::cerr << "contract error: " << e.what() << '\n';
    return kExitContract;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return kExitResource;
  }
  return status;
}
