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
#include <vector>

#include "vcsp/polymorphism.hpp"

namespace vcsp {

struct PpResult {
  bool definable = false;
  /// When not definable: an |r|-ary polymorphism mapping the tuples of r
  /// (as columns) outside r.
  std::optional<Operation> violating;
};

/// Decides r in <Gamma> through the Galois connection: r is pp-definable
/// iff every |r|-ary polymorphism maps the tuples of r into r. Members of
/// Gamma, the empty relation and full relations short-cut to true.
/// ResourceError when |r| exceeds opts.max_arity.
PpResult pp_definable(const std::vector<Relation>& gamma, const Relation& r,
                      const FindOptions& opts = {});

/// Subsets U of D (as bit sets) with U in <Gamma>, in increasing order.
std::vector<ValueSet> definable_subsets(const std::vector<Relation>& gamma,
                                        std::size_t domain_size,
                                        const FindOptions& opts = {});

}  // namespace vcsp
