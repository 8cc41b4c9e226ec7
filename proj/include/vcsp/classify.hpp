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

#include "vcsp/extract.hpp"
#include "vcsp/io.hpp"
#include "vcsp/mincore.hpp"
#include "vcsp/types.hpp"

namespace vcsp {

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr std::size_t kConservativeMaxDomain = 5;

enum class Verdict { kPO, kNPHard, kUnsupported };
std::string to_string(Verdict v);

/// A weighted pp-definition to be re-evaluated: the optimal projection of
/// `instance` onto `output` is `relation`, or with `expresses` set, the
/// valuation expressed at output[0] is that one. The language is the base
/// language ("input" or "core") plus the relations of the earlier gadgets
/// named in `uses`, each under its gadget name.
struct GadgetCheck {
  std::string name;
  std::string base;
  std::vector<std::string> uses;
  MinHomInstance instance;
  std::vector<Variable> output;
  Relation relation;
  std::optional<Valuation> expresses;
  std::string note;
};

/// A claim that some polymorphism or fpol does not exist, re-decided on
/// verification.
///   pair-operation (x,y): no semilattice, majority or minority on {x,y}
///   icc-pair (x,y): not both ICC operations on {x,y}
///   down-down (a,b,c,d): no polymorphism in down(a,b) down(c,d)
///   dominating (a,b): no (a,b)-dominating binary fpol
///   gmc, bsm: the core is not of that type
struct AbsenceClaim {
  std::string kind;
  std::vector<Value> values;
  std::string base;
};

struct HardnessEvidence {
  std::vector<AbsenceClaim> absent;
  std::vector<GadgetCheck> gadgets;
};

struct ConservativeAnalysis {
  std::vector<Pair> B, A;
  std::vector<Pair> M;  // ordered pairs, ascending
  std::vector<std::pair<Pair, Pair>> edges;  // first <= second
  /// Side of each vertex of M when T is bipartite: 0 puts f in down(a,b).
  std::vector<int> side;
  /// Otherwise v_0 ... v_2k with edges between neighbours and v_2k v_0.
  std::vector<Pair> odd_cycle;
};

/// One distinct pp-closure met during the unary-set search.
struct UnarySearchStep {
  std::vector<ValueSet> unaries;
  bool csp = false;
  std::optional<bool> gwtp;  // unset when the CSP test already failed
};

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  int schema_version = kCertificateSchemaVersion;
  std::string problem;  // "minsol3" or "conservative"
  Verdict verdict = Verdict::kUnsupported;
  std::string explanation;
  Language language;
  std::optional<MinCoreResult> min_core;
  std::vector<ValueSet> unaries;  // S
  std::vector<UnarySearchStep> search;
  std::optional<TypeWitness> witness;
  std::optional<Operation> siggers;
  std::vector<PairOperation> pair_operations;
  std::optional<ConservativeAnalysis> analysis;
  std::optional<HardnessEvidence> hardness;
  std::vector<CheckResult> checks;
};

struct ClassifyOptions {
  GwtpOptions gwtp;
};

/// Three-element MinSol: min-core, GMC and BSM tests, then the unary
/// sets S by size and lexicographic order. Unsupported unless |D| = 3 with
/// one finite injective valuation.
Certificate classify_minsol3(const Language& lang, const ClassifyOptions& opts = {});

/// Conservative MinHom. ContractError when some nonempty subset of D is
/// missing from Gamma; Unsupported above kConservativeMaxDomain elements.
Certificate classify_conservative(const Language& lang, const ClassifyOptions& opts = {});

/// The witness, CSP evidence, analysis, absence claims and gadgets of the
/// certificate, checked directly.
std::vector<CheckResult> run_checks(const Certificate& cert, const ClassifyOptions& opts = {});

Json certificate_to_json(const Certificate& cert);
/// ParseError on a malformed document.
Certificate certificate_from_json(const Json& j);

/// [{"operation": [labels, row-major], "weight": "p/q"}, ...]
Json fpol_to_json(const FractionalPolymorphism& w, const Domain& d);
/// ParseError on a malformed list. Weights are taken as given; validity is
/// for validate_fpol to decide.
FractionalPolymorphism fpol_from_json(const Json& j, const Domain& d, std::size_t arity = 2);

struct CertificateVerification {
  bool ok = false;
  std::vector<CheckResult> checks;
  /// Classifying the embedded language again gives the same document.
  bool rederived = false;
  std::vector<std::string> failures;
};

/// Parses, re-runs every check and re-derives the certificate. Never
/// throws on bad input; problems land in `failures`.
CertificateVerification verify_certificate(const Json& j, const ClassifyOptions& opts = {});

}  // namespace vcsp
