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

#include "vcsp/lp.hpp"

#include <stdexcept>

#include "vcsp/errors.hpp"

namespace vcsp {

LinearSystem::LinearSystem(std::size_t num_variables)
    : nonneg_(num_variables, false) {}

void LinearSystem::set_all_nonnegative() { nonneg_.assign(nonneg_.size(), true); }

void LinearSystem::check_width(const std::vector<Rational>& a) const {
  if (a.size() != num_variables())
    throw ContractError("linear row has " + std::to_string(a.size()) +
                        " coefficients, expected " + std::to_string(num_variables()));
}

std::size_t LinearSystem::add_weak(std::vector<Rational> a, Rational b) {
  check_width(a);
  weak_.push_back({std::move(a), std::move(b)});
  return weak_.size() - 1;
}

std::size_t LinearSystem::add_strict(std::vector<Rational> a, Rational c) {
  check_width(a);
  strict_.push_back({std::move(a), std::move(c)});
  return strict_.size() - 1;
}

void LinearSystem::add_equality(const std::vector<Rational>& a, const Rational& b) {
  add_weak(a, b);
  std::vector<Rational> neg(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) neg[j] = -a[j];
  add_weak(std::move(neg), -b);
}

std::string to_string(MotzkinCertificate::DualCase c) {
  return c == MotzkinCertificate::DualCase::kNegativeCombination ? "negative_combination"
                                                                 : "zero_with_z_nonzero";
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (sgn(a[j]) != 0 && sgn(x[j]) != 0) s += a[j] * x[j];
  return s;
}

CertificateCheck fail(std::string why) { return {false, std::move(why)}; }

}  // namespace

CertificateCheck verify_certificate(const LinearSystem& sys,
                                    const MotzkinCertificate& cert) {
  const std::size_t n = sys.num_variables();
  if (cert.primal()) {
    if (cert.x.size() != n) return fail("primal point has wrong dimension");
    for (std::size_t j = 0; j < n; ++j)
      if (sys.nonnegative(j) && sgn(cert.x[j]) < 0)
        return fail("variable " + std::to_string(j) + " is negative");
    for (std::size_t i = 0; i < sys.weak_rows().size(); ++i) {
      const auto& r = sys.weak_rows()[i];
      if (dot(r.a, cert.x) > r.bound) return fail("weak row " + std::to_string(i) + " violated");
    }
    for (std::size_t i = 0; i < sys.strict_rows().size(); ++i) {
      const auto& r = sys.strict_rows()[i];
      if (dot(r.a, cert.x) >= r.bound)
        return fail("strict row " + std::to_string(i) + " violated");
    }
    return {true, {}};
  }
  if (cert.y.size() != sys.weak_rows().size() || cert.z.size() != sys.strict_rows().size())
    return fail("dual multipliers have wrong dimension");
  for (const auto& v : cert.y)
    if (sgn(v) < 0) return fail("negative weak multiplier");
  for (const auto& v : cert.z)
    if (sgn(v) < 0) return fail("negative strict multiplier");
  std::vector<Rational> g(n, Rational(0));
  Rational rhs = 0;
  bool z_nonzero = false;
  auto accumulate = [&](const LinearSystem::Row& row, const Rational& m) {
    if (sgn(m) == 0) return;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(row.a[j]) != 0) g[j] += m * row.a[j];
    rhs += m * row.bound;
  };
  for (std::size_t i = 0; i < cert.y.size(); ++i) accumulate(sys.weak_rows()[i], cert.y[i]);
  for (std::size_t i = 0; i < cert.z.size(); ++i) {
    accumulate(sys.strict_rows()[i], cert.z[i]);
    z_nonzero = z_nonzero || sgn(cert.z[i]) != 0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sys.nonnegative(j) ? sgn(g[j]) < 0 : sgn(g[j]) != 0)
      return fail("combination is nonzero at variable " + std::to_string(j));
  }
  if (cert.dual_case == MotzkinCertificate::DualCase::kNegativeCombination) {
    if (sgn(rhs) >= 0) return fail("combined bound is not negative");
  } else {
    if (sgn(rhs) != 0) return fail("combined bound is not zero");
    if (!z_nonzero) return fail("strict multipliers are all zero");
  }
  return {true, {}};
}

namespace {

using Column = std::vector<std::pair<std::size_t, Rational>>;

// Revised simplex on  min c.w  s.t.  E w = h, w >= 0, h >= 0, with a dense
// basis inverse. Every column index order is also the Bland order.
class Simplex {
 public:
  Simplex(std::vector<Column> cols, std::vector<Rational> h, std::vector<std::size_t> basis)
      : m_(h.size()), cols_(std::move(cols)), basis_(std::move(basis)),
        pos_(cols_.size(), npos), binv_(m_, std::vector<Rational>(m_, Rational(0))),
        xb_(std::move(h)) {
    // The starting basis columns are unit vectors +e_i.
    for (std::size_t i = 0; i < m_; ++i) {
      binv_[i][i] = 1;
      pos_[basis_[i]] = i;
    }
  }

  // Optimises over columns [0, limit). Returns false when unbounded.
  bool run(const std::vector<Rational>& cost, std::size_t limit) {
    std::vector<Rational> col(m_);
    while (true) {
      std::vector<Rational> pi = multipliers(cost);
      std::size_t enter = npos;
      Rational d;
      for (std::size_t j = 0; j < limit; ++j) {
        if (pos_[j] != npos) continue;
        d = cost[j];
        for (const auto& [r, a] : cols_[j])
          if (sgn(pi[r]) != 0) d -= pi[r] * a;
        if (sgn(d) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == npos) return true;
      ftran(enter, col);
      std::size_t leave = npos;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(col[i]) <= 0) continue;
        Rational ratio = xb_[i] / col[i];
        if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == npos) return false;
      pivot(leave, enter, col);
    }
  }

  std::vector<Rational> multipliers(const std::vector<Rational>& cost) const {
    std::vector<Rational> pi(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t k = 0; k < m_; ++k)
        if (sgn(binv_[i][k]) != 0) pi[k] += cb * binv_[i][k];
    }
    return pi;
  }

  // Replaces basic columns at index >= first_artificial by other columns
  // where the row allows it.
  void drive_out(std::size_t first_artificial) {
    std::vector<Rational> col(m_);
    for (std::size_t p = 0; p < m_; ++p) {
      if (basis_[p] < first_artificial) continue;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (pos_[j] != npos) continue;
        Rational e = 0;
        for (const auto& [r, a] : cols_[j])
          if (sgn(binv_[p][r]) != 0) e += binv_[p][r] * a;
        if (sgn(e) == 0) continue;
        ftran(j, col);
        pivot(p, j, col);
        break;
      }
    }
  }

  Rational value(std::size_t j) const {
    return pos_[j] == npos ? Rational(0) : xb_[pos_[j]];
  }

  Rational objective(const std::vector<Rational>& cost) const {
    Rational s = 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (sgn(cost[basis_[i]]) != 0) s += cost[basis_[i]] * xb_[i];
    return s;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void ftran(std::size_t j, std::vector<Rational>& col) const {
    for (std::size_t i = 0; i < m_; ++i) {
      Rational s = 0;
      for (const auto& [r, a] : cols_[j])
        if (sgn(binv_[i][r]) != 0) s += binv_[i][r] * a;
      col[i] = std::move(s);
    }
  }

  void pivot(std::size_t p, std::size_t enter, const std::vector<Rational>& col) {
    Rational inv = 1 / col[p];
    for (auto& v : binv_[p])
      if (sgn(v) != 0) v *= inv;
    xb_[p] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || sgn(col[i]) == 0) continue;
      const Rational f = col[i];
      for (std::size_t k = 0; k < m_; ++k)
        if (sgn(binv_[p][k]) != 0) binv_[i][k] -= f * binv_[p][k];
      xb_[i] -= f * xb_[p];
    }
    pos_[basis_[p]] = npos;
    basis_[p] = enter;
    pos_[enter] = p;
  }

  std::size_t m_;
  std::vector<Column> cols_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
};

}  // namespace

MotzkinCertificate solve_alternative(const LinearSystem& sys) {
  const std::size_t n = sys.num_variables();
  const std::size_t nw = sys.weak_rows().size(), ns = sys.strict_rows().size();
  const std::size_t m = nw + ns;
  auto row = [&](std::size_t i) -> const LinearSystem::Row& {
    return i < nw ? sys.weak_rows()[i] : sys.strict_rows()[i - nw];
  };

  // Column layout: x+ (and x- for free variables), s, slacks, artificials.
  std::vector<std::size_t> plus(n), minus(n, static_cast<std::size_t>(-1));
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    plus[j] = ncols++;
    if (!sys.nonnegative(j)) minus[j] = ncols++;
  }
  const bool has_strict = ns > 0;
  const std::size_t s_col = has_strict ? ncols++ : 0;
  const std::size_t first_slack = ncols;
  ncols += m;
  const std::size_t first_art = ncols;

  std::vector<int> sign(m);
  std::vector<Rational> h(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rational r = row(i).bound;
    if (i >= nw) r -= 1;
    sign[i] = sgn(r) < 0 ? -1 : 1;
    h[i] = sign[i] < 0 ? -r : r;
  }
  std::vector<Column> cols(ncols);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = row(i).a;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(a[j]) == 0) continue;
      Rational v = sign[i] < 0 ? Rational(-a[j]) : a[j];
      if (minus[j] != static_cast<std::size_t>(-1)) cols[minus[j]].emplace_back(i, -v);
      cols[plus[j]].emplace_back(i, std::move(v));
    }
  }
  if (has_strict)
    for (std::size_t i = nw; i < m; ++i) cols[s_col].emplace_back(i, Rational(-sign[i]));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    cols[first_slack + i].emplace_back(i, Rational(sign[i]));
    if (sign[i] > 0) {
      basis[i] = first_slack + i;
    } else {
      basis[i] = cols.size();
      cols.push_back({{i, Rational(1)}});
    }
  }
  const std::size_t total = cols.size();
  Simplex lp(std::move(cols), h, basis);

  auto duals = [&](const std::vector<Rational>& cost, MotzkinCertificate& cert) {
    std::vector<Rational> pi = lp.multipliers(cost);
    cert.y.assign(nw, Rational(0));
    cert.z.assign(ns, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      Rational l = sign[i] < 0 ? pi[i] : Rational(-pi[i]);
      (i < nw ? cert.y[i] : cert.z[i - nw]) = std::move(l);
    }
  };
  auto checked = [&](MotzkinCertificate cert) {
    CertificateCheck c = verify_certificate(sys, cert);
    if (!c.ok) throw std::logic_error("simplex produced an invalid certificate: " + c.reason);
    return cert;
  };

  MotzkinCertificate cert;
  if (total > first_art) {
    std::vector<Rational> cost1(total, Rational(0));
    for (std::size_t j = first_art; j < total; ++j) cost1[j] = 1;
    if (!lp.run(cost1, total)) throw std::logic_error("phase one unbounded");
    if (sgn(lp.objective(cost1)) > 0) {
      cert.kind = MotzkinCertificate::Kind::kDual;
      cert.dual_case = MotzkinCertificate::DualCase::kNegativeCombination;
      duals(cost1, cert);
      return checked(std::move(cert));
    }
    lp.drive_out(first_art);
  }
  Rational s_value = 0;
  std::vector<Rational> cost2(total, Rational(0));
  if (has_strict) {
    cost2[s_col] = 1;
    if (!lp.run(cost2, first_art)) throw std::logic_error("phase two unbounded");
    s_value = lp.value(s_col);
  }
  if (s_value < 1) {
    cert.kind = MotzkinCertificate::Kind::kPrimal;
    cert.x.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      cert.x[j] = lp.value(plus[j]);
      if (minus[j] != static_cast<std::size_t>(-1)) cert.x[j] -= lp.value(minus[j]);
    }
    return checked(std::move(cert));
  }
  cert.kind = MotzkinCertificate::Kind::kDual;
  duals(cost2, cert);
  Rational comb = 0;
  for (std::size_t i = 0; i < nw; ++i) comb += cert.y[i] * sys.weak_rows()[i].bound;
  for (std::size_t i = 0; i < ns; ++i) comb += cert.z[i] * sys.strict_rows()[i].bound;
  cert.dual_case = sgn(comb) < 0 ? MotzkinCertificate::DualCase::kNegativeCombination
                                 : MotzkinCertificate::DualCase::kZeroWithZNonzero;
  return checked(std::move(cert));
}

}  // namespace vcsp
