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

#include "vcsp/operation.hpp"

namespace vcsp {

/// Three-element extension of an arithmetical operation. Requires |D| = 3,
/// f and m idempotent, a pair {a,c} with f(a,c) = f(c,a) = b (the third
/// element), f projections on {a,b} and {b,c}, and m arithmetical on
/// {a,b} and {b,c}. The roles a, b, c are read off f. Returns an
/// idempotent m' arithmetical on every pair; ContractError on a violated
/// precondition.
Operation build_arithmetical_extension(const Operation& f, const Operation& m);

}  // namespace vcsp
