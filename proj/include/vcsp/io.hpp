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

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/language.hpp"

namespace vcsp {

using Json = nlohmann::ordered_json;

struct Document {
  Language language;
  std::vector<std::pair<std::string, MinHomInstance>> instances;
};

/// Document grammar (JSON):
///
///   {
///     "domain": ["a", "b", "c"],
///     "relations": {
///       "R": [["a", "c"], ["c", "a"]],
///       "E": {"arity": 2, "tuples": []}
///     },
///     "valuations": {"nu": {"a": 0, "b": "1/2", "c": "inf"}},
///     "instances": {
///       "I": {
///         "variables": ["u", "v"],
///         "constraints": [["R", ["u", "v"]]],
///         "weights": [["u", "nu", 1], ["v", "nu", "3/2"]]
///       }
///     }
///   }
///
/// Values are JSON integers or strings holding an integer, "p/q" or "inf".
/// Weights must be finite. The object form of a relation is required when
/// it is empty and accepted otherwise. `relations`, `valuations` and
/// `instances` are optional.
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);
Document load_document(const std::string& path);

Json to_json(const Document& doc);
Json language_to_json(const Language& lang);
Json relation_to_json(const Relation& r, const Domain& domain);
Relation relation_from_json(const Json& j, const Domain& domain,
                            const std::string& where);
Json valuation_to_json(const Valuation& v, const Domain& domain);
Json instance_to_json(const MinHomInstance& inst, const Language& lang);
MinHomInstance instance_from_json(const Json& j, const Language& lang,
                                  const std::string& where);

/// Integer if whole, otherwise "p/q" string; "inf" for infinity.
Json number_to_json(const ExtRational& q);
ExtRational number_from_json(const Json& j, const std::string& where);

std::string read_file(const std::string& path);

}  // namespace vcsp
