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

#include "vcsp/arithmetical.hpp"

#include "vcsp/errors.hpp"

namespace vcsp {

Operation build_arithmetical_extension(const Operation& f0, const Operation& m) {
  if (f0.domain_size() != 3 || m.domain_size() != 3)
    throw ContractError("arithmetical extension needs a three-element domain");
  if (f0.arity() != 2 || m.arity() != 3)
    throw ContractError("arithmetical extension needs binary f and ternary m");
  if (!f0.is_idempotent() || !m.is_idempotent())
    throw ContractError("f and m must be idempotent");
  int found = 0;
  Value a = 0, b = 0, c = 0;
  for (Value x = 0; x < 3; ++x)
    for (Value z = x + 1; z < 3; ++z) {
      Value y = static_cast<Value>(3 - x - z);
      if (f0(x, z) == y && f0(z, x) == y) {
        a = x;
        b = y;
        c = z;
        ++found;
      }
    }
  if (found != 1)
    throw ContractError("f must send exactly one pair {a,c} to the third element");
  if (f0.projection_on(a, b) == 0 || f0.projection_on(b, c) == 0)
    throw ContractError("f must be a projection on {a,b} and {b,c}");
  if (!m.arithmetical_on(a, b) || !m.arithmetical_on(b, c))
    throw ContractError("m must be arithmetical on {a,b} and {b,c}");

  Operation f = f0;
  if (f.projection_on(a, b) != 1 || f.projection_on(b, c) != 1)
    f = superpose(f0, f0, conjugate(f0));

  auto g = [&](Value x, Value y, Value z) {
    return m(f(m(x, y, z), z), f(m(y, x, z), z), z);
  };
  auto h = [&](Value x, Value y, Value z) {
    return g(z, f(y, z), g(x, f(x, y), f(x, z)));
  };
  Operation out = Operation::from_function(3, 3, [&](std::span<const Value> t) {
    Value x = t[0], y = t[1], z = t[2];
    return g(f(x, y), f(y, x), h(x, y, z));
  });
  if (!out.is_idempotent() || !out.arithmetical_on(a, b) ||
      !out.arithmetical_on(b, c) || !out.arithmetical_on(a, c))
    throw std::logic_error("arithmetical extension failed its postcondition");
  return out;
}

}  // namespace vcsp
