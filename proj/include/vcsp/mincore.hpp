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

#include <vector>

#include "vcsp/language.hpp"
#include "vcsp/polymorphism.hpp"

namespace vcsp {

struct MinCoreStep {
  Domain domain;  // domain the map acts on
  Operation map;  // unary polymorphism with nu(f(x)) <= nu(x)
};

struct MinCoreResult {
  Language core;
  std::vector<MinCoreStep> chain;  // empty when already a min-core
  /// For each element of the core, its label in the input domain.
  std::vector<Value> embedding;
};

/// Allowed images: y with nu(y) <= nu(x) for every nu in Delta.
std::vector<ValueSet> decreasing_images(const Language& lang);

/// A non-surjective unary polymorphism with nu(f(x)) <= nu(x), searching
/// the omitted value in index order.
std::optional<Operation> find_shrinking_map(const Language& lang,
                                            const FindOptions& opts = {});

MinCoreResult min_core(const Language& lang, const FindOptions& opts = {});

}  // namespace vcsp
