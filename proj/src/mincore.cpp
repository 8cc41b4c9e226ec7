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

#include "vcsp/mincore.hpp"

#include <numeric>

namespace vcsp {

std::vector<ValueSet> decreasing_images(const Language& lang) {
  std::size_t n = lang.domain_size();
  std::vector<ValueSet> out(n, 0);
  for (Value x = 0; x < n; ++x)
    for (Value y = 0; y < n; ++y) {
      bool ok = true;
      for (const auto& v : lang.named_valuations())
        ok = ok && v.valuation(y) <= v.valuation(x);
      if (ok) out[x] |= bit(y);
    }
  return out;
}

std::optional<Operation> find_shrinking_map(const Language& lang,
                                            const FindOptions& opts) {
  std::size_t n = lang.domain_size();
  if (n == 1) return std::nullopt;
  auto allowed = decreasing_images(lang);
  auto gamma = lang.relations();
  for (Value z = 0; z < n; ++z) {
    OperationConstraint c(n, 1);
    for (Value x = 0; x < n; ++x) c.allow({x}, allowed[x] & ~bit(z));
    if (auto f = find_operation(gamma, c, opts)) return f;
  }
  return std::nullopt;
}

MinCoreResult min_core(const Language& lang, const FindOptions& opts) {
  MinCoreResult out;
  out.core = lang;
  out.embedding.resize(lang.domain_size());
  std::iota(out.embedding.begin(), out.embedding.end(), Value{0});
  while (auto f = find_shrinking_map(out.core, opts)) {
    ValueSet img = f->image();
    out.chain.push_back({out.core.domain(), *f});
    std::vector<Value> next;
    for (Value v : members(img)) next.push_back(out.embedding[v]);
    out.embedding = std::move(next);
    out.core = restrict_language(out.core, img);
  }
  return out;
}

}  // namespace vcsp
