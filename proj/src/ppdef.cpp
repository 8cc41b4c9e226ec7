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

#include "vcsp/ppdef.hpp"

#include <algorithm>

#include "vcsp/errors.hpp"

namespace vcsp {

PpResult pp_definable(const std::vector<Relation>& gamma, const Relation& r,
                      const FindOptions& opts) {
  PpResult out;
  std::size_t full = 1;
  for (std::size_t i = 0; i < r.arity(); ++i) full *= r.domain_size();
  if (r.empty() || r.size() == full ||
      std::find(gamma.begin(), gamma.end(), r) != gamma.end()) {
    out.definable = true;
    return out;
  }
  std::size_t k = r.size();
  if (k > opts.max_arity)
    throw ResourceError("pp-definability of a " + std::to_string(k) +
                        "-tuple relation needs arity above the cap of " +
                        std::to_string(opts.max_arity));
  OperationConstraint c(r.domain_size(), k);
  c.forbid_image(r.tuples(), r);
  auto f = find_operation(gamma, c, opts);
  out.definable = !f.has_value();
  out.violating = std::move(f);
  return out;
}

std::vector<ValueSet> definable_subsets(const std::vector<Relation>& gamma,
                                        std::size_t n, const FindOptions& opts) {
  std::vector<ValueSet> out;
  for (ValueSet s = 1; s <= full_set(n); ++s)
    if (pp_definable(gamma, Relation::unary(n, s), opts).definable) out.push_back(s);
  return out;
}

}  // namespace vcsp
