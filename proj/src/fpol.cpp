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

#include "vcsp/fpol.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "vcsp/errors.hpp"

namespace vcsp {

FractionalPolymorphism FractionalPolymorphism::from_weights(
    std::size_t arity, std::vector<std::pair<Operation, Rational>> weights) {
  std::map<Operation, Rational> merged;
  for (auto& [g, w] : weights) {
    if (g.arity() != arity) throw ContractError("fractional polymorphism arity mismatch");
    merged[g] += w;
  }
  FractionalPolymorphism out;
  out.arity = arity;
  for (auto& [g, w] : merged)
    if (sgn(w) != 0) out.weights.emplace_back(g, w);
  return out;
}

FpolCheck validate_fpol(const Language& lang, const FractionalPolymorphism& w) {
  const std::size_t n = lang.domain_size(), k = w.arity;
  if (k == 0) return {false, "arity is zero"};
  if (w.weights.empty()) return {false, "empty support"};
  Rational total = 0;
  const auto gamma = lang.relations();
  for (const auto& [g, q] : w.weights) {
    if (g.arity() != k || g.domain_size() != n)
      return {false, "support operation has wrong shape"};
    if (sgn(q) <= 0) return {false, "nonpositive weight"};
    total += q;
    if (!is_polymorphism(g, gamma))
      return {false, "support operation " + to_string(g, lang.domain()) +
                         " is not a polymorphism"};
  }
  if (total != 1) return {false, "weights sum to " + to_string(total)};
  const ExtRational inv_k(make_rational(1, static_cast<long>(k)));
  const auto args = Relation::full(n, k).tuples();
  for (std::size_t vi = 0; vi < lang.named_valuations().size(); ++vi) {
    const Valuation& nu = lang.valuation(vi);
    for (const Tuple& x : args) {
      ExtRational lhs(0), rhs(0);
      for (const auto& [g, q] : w.weights) lhs += ExtRational(q) * nu(g(x));
      for (Value v : x) rhs += nu(v);
      rhs = inv_k * rhs;
      if (!(lhs <= rhs))
        return {false, "inequality fails for " + lang.named_valuations()[vi].name +
                           " at " + to_string(x, lang.domain())};
    }
  }
  return {true, {}};
}

bool is_dominating(const FractionalPolymorphism& w, Value a, Value b) {
  if (w.arity != 2) return false;
  Rational to_a = 0, to_b = 0;
  for (const auto& [g, q] : w.weights) {
    Value v = g(a, b);
    if (v == a) to_a += q;
    if (v == b) to_b += q;
  }
  const Rational half = make_rational(1, 2);
  return to_a >= half && half > to_b;
}

std::vector<Operation> finite_binary_polymorphisms(const Language& lang,
                                                   const OperationConstraint* extra,
                                                   const FpolOptions& opts) {
  const std::size_t n = lang.domain_size();
  OperationConstraint c = extra ? *extra : OperationConstraint(n, 2);
  c.domain_size = n;
  c.arity = 2;
  for (Value x = 0; x < n; ++x)
    for (Value y = 0; y < n; ++y) {
      ValueSet allowed = full_set(n);
      for (const auto& nv : lang.named_valuations()) {
        ValueSet fin = nv.valuation.finite_part();
        if (has(fin, x) && has(fin, y)) allowed &= fin;
      }
      if (allowed != full_set(n)) c.allow({x, y}, allowed);
    }
  return enumerate_binary_polymorphisms(lang.relations(), c, opts.budget, opts.find);
}

std::vector<ValuationRow> valuation_rows(const Language& lang) {
  std::vector<ValuationRow> rows;
  for (std::size_t vi = 0; vi < lang.named_valuations().size(); ++vi) {
    ValueSet fin = lang.valuation(vi).finite_part();
    for (Value x : members(fin))
      for (Value y : members(fin)) rows.push_back({vi, x, y});
  }
  return rows;
}

namespace {

constexpr std::size_t kMaxPositiveWeightRows = 4000;

void check_pair(const Language& lang, Value a, Value b) {
  if (a >= lang.domain_size() || b >= lang.domain_size())
    throw ContractError("value outside the domain");
  if (a == b) throw ContractError("the pair (a,b) needs two different values");
}

Rational finite(const ExtRational& v) {
  if (!v.is_finite()) throw std::logic_error("infinite coefficient in an LP row");
  return v.value();
}

FractionalPolymorphism fpol_from(const std::vector<Operation>& ops,
                                 const std::vector<Rational>& x) {
  std::vector<std::pair<Operation, Rational>> w;
  for (std::size_t j = 0; j < ops.size(); ++j)
    if (sgn(x[j]) > 0) w.emplace_back(ops[j], x[j]);
  return FractionalPolymorphism::from_weights(2, std::move(w));
}

std::string pair_label(const Domain& d, Value x, Value y) {
  return "(" + d.label(x) + "," + d.label(y) + ")";
}

}  // namespace

DominationQuery exists_dominating_fpol(const Language& lang, Value a, Value b,
                                       const FpolOptions& opts) {
  check_pair(lang, a, b);
  DominationQuery q;
  q.a = a;
  q.b = b;
  q.omega = finite_binary_polymorphisms(lang, nullptr, opts);
  const std::size_t m = q.omega.size();
  LinearSystem sys(m);
  sys.set_all_nonnegative();
  for (const auto& r : valuation_rows(lang)) {
    const Valuation& nu = lang.valuation(r.valuation);
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = finite(nu(q.omega[j](r.x, r.y)));
    sys.add_weak(std::move(row), make_rational(1, 2) * (finite(nu(r.x)) + finite(nu(r.y))));
  }
  std::vector<Rational> ones(m, Rational(1)), to_a(m, Rational(0)), to_b(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    Value v = q.omega[j](a, b);
    if (v == a) to_a[j] = -1;
    if (v == b) to_b[j] = 1;
  }
  sys.add_equality(ones, 1);
  sys.add_weak(std::move(to_a), make_rational(-1, 2));
  sys.add_strict(std::move(to_b), make_rational(1, 2));
  q.certificate = solve_alternative(sys);
  q.system = std::move(sys);
  if (q.certificate.primal()) {
    q.fpol = fpol_from(q.omega, q.certificate.x);
    auto check = validate_fpol(lang, *q.fpol);
    if (!check.ok) throw std::logic_error("dominating fpol failed validation: " + check.reason);
    if (!is_dominating(*q.fpol, a, b))
      throw std::logic_error("LP solution is not dominating");
  }
  return q;
}

MinHomInstance binary_indicator_instance(const Language& lang) {
  const std::size_t n = lang.domain_size();
  std::vector<std::string> names;
  for (Value x = 0; x < n; ++x)
    for (Value y = 0; y < n; ++y) names.push_back(pair_label(lang.domain(), x, y));
  MinHomInstance inst(std::move(names));
  for (const auto& nr : lang.named_relations()) {
    const auto& ts = nr.relation.tuples();
    std::set<std::vector<Variable>> scopes;
    for (const auto& t1 : ts)
      for (const auto& t2 : ts) {
        std::vector<Variable> scope(t1.size());
        for (std::size_t i = 0; i < t1.size(); ++i) scope[i] = t1[i] * n + t2[i];
        if (scopes.insert(scope).second) inst.add_constraint(scope, nr.relation, nr.name);
      }
  }
  return inst;
}

SeparatingValuation construct_separating_valuation(const Language& lang,
                                                   const DominationQuery& q,
                                                   const SearchOptions& search) {
  if (q.certificate.primal())
    throw ContractError("a dominating fractional polymorphism exists");
  if (!verify_certificate(q.system, q.certificate).ok)
    throw ContractError("dual certificate does not verify");
  const std::size_t n = lang.domain_size();
  const auto rows = valuation_rows(lang);
  auto vpart = [&](const Operation& g) {
    Rational s = 0;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational& v = q.certificate.y[k];
      if (sgn(v) != 0) s += v * finite(lang.valuation(rows[k].valuation)(g(rows[k].x, rows[k].y)));
    }
    return s;
  };
  const Operation pr2 = Operation::projection(n, 2, 1);
  std::optional<Rational> min_a;
  for (const auto& g : q.omega)
    if (g(q.a, q.b) == q.a) {
      Rational s = vpart(g);
      if (!min_a || s < *min_a) min_a = s;
    }
  if (!min_a) throw ContractError("no operation with g(a,b) = a");
  Rational gap = *min_a - vpart(pr2);
  if (sgn(gap) <= 0) throw ContractError("dual certificate does not separate a from b");
  Rational uniform = 0;
  for (const auto& r : rows) uniform += finite(lang.valuation(r.valuation)(r.y));
  Rational ratio = uniform / gap;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());

  SeparatingValuation out;
  out.scale = Rational(fl + 1);
  out.instance = binary_indicator_instance(lang);
  for (std::size_t k = 0; k < rows.size(); ++k)
    out.instance.add_weight(rows[k].x * n + rows[k].y, rows[k].valuation,
                            out.scale * q.certificate.y[k] + 1);
  out.variable = q.a * n + q.b;
  out.valuation = expressed_valuation(lang, out.instance, out.variable, search);
  const ExtRational& va = out.valuation(q.a);
  const ExtRational& vb = out.valuation(q.b);
  if (!va.is_finite() || !(vb < va))
    throw std::logic_error("separating valuation does not satisfy inf > nu(a) > nu(b)");
  return out;
}

FpolAlternative lemma_fpol_alternative(const Language& lang, Value a, Value b,
                                       const Valuation& sigma, const FpolOptions& opts,
                                       const SearchOptions& search) {
  check_pair(lang, a, b);
  const std::size_t n = lang.domain_size();
  if (sigma.domain_size() != n) throw ContractError("sigma over a different domain");
  const std::vector<Operation> omega1 = finite_binary_polymorphisms(lang, nullptr, opts);
  const ExtRational sab = sigma(a) + sigma(b);
  std::vector<std::size_t> omega2;
  for (std::size_t q = 0; q < omega1.size(); ++q) {
    const Operation& g = omega1[q];
    Value u = g(a, b), v = g(b, a);
    bool swap = (u == a && v == b) || (u == b && v == a);
    if (!swap && sigma(u) + sigma(v) <= sab) omega2.push_back(q);
  }
  const auto rows = valuation_rows(lang);
  const Operation pr[2] = {Operation::projection(n, 2, 0), Operation::projection(n, 2, 1)};

  // Columns z_{i,j,g}: (i, g in Omega_1) first, then (i, g in Omega_2).
  struct Col {
    int i, j;
    std::size_t g;
  };
  std::vector<Col> cols;
  for (std::size_t q = 0; q < omega1.size(); ++q)
    for (int i = 0; i < 2; ++i) cols.push_back({i, 1, q});
  for (std::size_t q : omega2)
    for (int i = 0; i < 2; ++i) cols.push_back({i, 2, q});
  auto coeff = [&](std::size_t k, int i, const Operation& g) -> Rational {
    const auto& r = rows[k];
    const Valuation& nu = lang.valuation(r.valuation);
    return finite(nu(pr[i](r.x, r.y))) - finite(nu(g(r.x, r.y)));
  };

  FpolAlternative out;
  LinearSystem sys(cols.size());
  sys.set_all_nonnegative();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::vector<Rational> row(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      row[c] = -coeff(k, cols[c].i, omega1[cols[c].g]);
    sys.add_weak(std::move(row), 0);
  }
  std::vector<Rational> strict_sum(cols.size(), Rational(0));
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (cols[c].j == 2) strict_sum[c] = 1;
  sys.add_equality(strict_sum, 1);
  out.certificate = solve_alternative(sys);

  if (out.certificate.primal()) {
    const auto& z = out.certificate.x;
    std::map<Operation, std::size_t> index;
    for (std::size_t q = 0; q < omega1.size(); ++q) index[omega1[q]] = q;
    std::vector<Rational> zs[2] = {std::vector<Rational>(omega1.size(), Rational(0)),
                                   std::vector<Rational>(omega1.size(), Rational(0))};
    for (std::size_t c = 0; c < cols.size(); ++c) zs[cols[c].j - 1][cols[c].g] += z[c];
    std::vector<Rational> weight(omega1.size(), Rational(0));
    std::vector<bool> in2(omega1.size(), false);
    for (std::size_t q : omega2) in2[q] = true;
    for (std::size_t q = 0; q < omega1.size(); ++q) {
      auto it = index.find(conjugate(omega1[q]));
      if (it == index.end()) throw std::logic_error("Omega is not closed under conjugation");
      std::size_t qb = it->second;
      weight[q] += zs[0][q] + zs[0][qb];
      if (in2[q]) weight[q] += zs[1][q] + zs[1][qb];
    }
    Rational total = 0;
    for (const auto& w : weight) total += w;
    for (auto& w : weight) w /= total;
    out.fpol = fpol_from(omega1, weight);
    auto check = validate_fpol(lang, *out.fpol);
    if (!check.ok) throw std::logic_error("constructed fpol failed validation: " + check.reason);
    for (const auto& [g, w] : out.fpol->weights) {
      Value u = g(a, b), v = g(b, a);
      bool swap = (u == a && v == b) || (u == b && v == a);
      if (!swap && sigma(u) + sigma(v) <= sab) {
        out.f = g;
        break;
      }
    }
    if (!out.f) throw std::logic_error("constructed fpol has no improving support operation");
    out.system = std::move(sys);
    return out;
  }

  CrossWitness cw;
  cw.p.assign(out.certificate.y.begin(), out.certificate.y.begin() + rows.size());
  auto ppart = [&](const Operation& g) {
    Rational s = 0;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (sgn(cw.p[k]) != 0)
        s += cw.p[k] * finite(lang.valuation(rows[k].valuation)(g(rows[k].x, rows[k].y)));
    return s;
  };
  bool all_finite = true;
  for (const auto& nv : lang.named_valuations())
    all_finite = all_finite && nv.valuation.is_finite();
  cw.instance = binary_indicator_instance(lang);
  auto add_weights = [&](const std::vector<Rational>& w) {
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (sgn(w[k]) != 0)
        cw.instance.add_weight(rows[k].x * n + rows[k].y, rows[k].valuation, w[k]);
  };
  std::optional<std::vector<Rational>> positive;
  if (!all_finite && 2 * omega1.size() <= kMaxPositiveWeightRows) {
    // Weights bounded away from zero on the rows of partial valuations keep
    // finite-measure solutions inside Omega_1 without a tie-break term.
    LinearSystem ps(rows.size());
    ps.set_all_nonnegative();
    std::vector<bool> in2(omega1.size(), false);
    for (std::size_t q : omega2) in2[q] = true;
    std::set<std::pair<std::vector<Rational>, bool>> seen;
    for (std::size_t q = 0; q < omega1.size(); ++q)
      for (int i = 0; i < 2; ++i) {
        std::vector<Rational> row(rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) row[k] = coeff(k, i, omega1[q]);
        if (!seen.insert({row, in2[q]}).second) continue;
        ps.add_weak(std::move(row), in2[q] ? Rational(-1) : Rational(0));
      }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (lang.valuation(rows[k].valuation).is_finite()) continue;
      std::vector<Rational> row(rows.size(), Rational(0));
      row[k] = -1;
      ps.add_weak(std::move(row), -1);
    }
    auto pc = solve_alternative(ps);
    if (pc.primal()) positive = pc.x;
  }
  if (all_finite || positive) {
    cw.scale = 0;
    if (positive) cw.p = *positive;
    add_weights(cw.p);
  } else {
    // Exact replacement for the small epsilon: scale the p-part so that no
    // uniform-term difference can overturn a p-part comparison over Omega.
    Rational best = ppart(pr[0]);
    std::optional<Rational> gap;
    std::optional<Rational> umin, umax;
    for (const auto& g : omega1) {
      Rational s = ppart(g);
      if (s > best && (!gap || s - best < *gap)) gap = s - best;
      Rational u = 0;
      for (const auto& r : rows) u += finite(lang.valuation(r.valuation)(g(r.x, r.y)));
      if (!umin || u < *umin) umin = u;
      if (!umax || u > *umax) umax = u;
    }
    Rational scale = 1;
    if (gap) {
      Rational ratio = (*umax - *umin) / *gap;
      mpz_class fl;
      mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
      scale = Rational(fl + 1);
    }
    cw.scale = scale;
    std::vector<Rational> w(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) w[k] = scale * cw.p[k] + 1;
    add_weights(w);
  }
  cw.ab = a * n + b;
  cw.ba = b * n + a;
  cw.projection = optimal_projection(lang, cw.instance, {cw.ab, cw.ba}, search);
  std::optional<ExtRational> best;
  for (const auto& t : cw.projection.tuples()) {
    ExtRational s = sigma(t[0]) + sigma(t[1]);
    if (!best || s < *best) best = s;
  }
  std::vector<Tuple> arg;
  for (const auto& t : cw.projection.tuples())
    if (sigma(t[0]) + sigma(t[1]) == *best) arg.push_back(t);
  cw.argmin = Relation(n, 2, std::move(arg));
  cw.validated = cw.argmin == pictogram(Pictogram::kCross, n, a, b, a, b);
  out.cross = std::move(cw);
  out.system = std::move(sys);
  return out;
}

SymmetricQuery exists_symmetric_fpol(const Language& lang, std::size_t arity,
                                     const FpolOptions& opts) {
  if (arity != 2) throw ContractError("symmetric fpol search is binary only");
  const std::size_t n = lang.domain_size();
  OperationConstraint comm(n, 2);
  for (Value x = 0; x < n; ++x)
    for (Value y = x + 1; y < n; ++y) comm.commutative_on.push_back({x, y});
  SymmetricQuery q;
  q.omega = finite_binary_polymorphisms(lang, &comm, opts);
  const std::size_t m = q.omega.size();
  LinearSystem sys(m);
  sys.set_all_nonnegative();
  for (const auto& r : valuation_rows(lang)) {
    const Valuation& nu = lang.valuation(r.valuation);
    std::vector<Rational> row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = finite(nu(q.omega[j](r.x, r.y)));
    sys.add_weak(std::move(row), make_rational(1, 2) * (finite(nu(r.x)) + finite(nu(r.y))));
  }
  sys.add_equality(std::vector<Rational>(m, Rational(1)), 1);
  q.certificate = solve_alternative(sys);
  q.system = std::move(sys);
  if (q.certificate.primal()) {
    q.fpol = fpol_from(q.omega, q.certificate.x);
    auto check = validate_fpol(lang, *q.fpol);
    if (!check.ok) throw std::logic_error("symmetric fpol failed validation: " + check.reason);
  }
  return q;
}

}  // namespace vcsp
