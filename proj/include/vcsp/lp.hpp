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
#include <vector>

#include "vcsp/rational.hpp"

namespace vcsp {

/// Rows a.x <= b (weak) and a.x < c (strict) over Q^n, with optional
/// per-variable nonnegativity. Coefficients are stored densely.
class LinearSystem {
 public:
  struct Row {
    std::vector<Rational> a;
    Rational bound;
  };

  LinearSystem() = default;
  explicit LinearSystem(std::size_t num_variables);

  std::size_t num_variables() const { return nonneg_.size(); }
  const std::vector<Row>& weak_rows() const { return weak_; }
  const std::vector<Row>& strict_rows() const { return strict_; }
  bool nonnegative(std::size_t j) const { return nonneg_.at(j); }

  void set_nonnegative(std::size_t j, bool v = true) { nonneg_.at(j) = v; }
  void set_all_nonnegative();
  std::size_t add_weak(std::vector<Rational> a, Rational b);
  std::size_t add_strict(std::vector<Rational> a, Rational c);
  /// Two weak rows a.x <= b and -a.x <= -b.
  void add_equality(const std::vector<Rational>& a, const Rational& b);

 private:
  void check_width(const std::vector<Rational>& a) const;

  std::vector<bool> nonneg_;
  std::vector<Row> weak_;
  std::vector<Row> strict_;
};

/// Exactly one of the two alternatives. The dual side is stated for a
/// system with nonnegativity flags: with g = A^T y + B^T z, g_j = 0 for a
/// free variable and g_j >= 0 for a nonnegative one (the excess is the
/// multiplier of the implicit row -x_j <= 0), and either b.y + c.z < 0 or
/// b.y + c.z = 0 with z != 0.
struct MotzkinCertificate {
  enum class Kind { kPrimal, kDual };
  enum class DualCase { kNegativeCombination, kZeroWithZNonzero };

  Kind kind = Kind::kPrimal;
  DualCase dual_case = DualCase::kNegativeCombination;
  std::vector<Rational> x;  // primal point
  std::vector<Rational> y;  // one per weak row
  std::vector<Rational> z;  // one per strict row

  bool primal() const { return kind == Kind::kPrimal; }
};

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Substitution check, independent of the solver.
CertificateCheck verify_certificate(const LinearSystem& system,
                                    const MotzkinCertificate& cert);

/// Two-phase primal simplex over Q with Bland's rule. Strict rows share a
/// single slack; the dual side comes from the final simplex multipliers.
/// Every returned certificate has passed verify_certificate.
MotzkinCertificate solve_alternative(const LinearSystem& system);

std::string to_string(MotzkinCertificate::DualCase c);

}  // namespace vcsp
