// Exact division and multivariate gcd over Q.
//
// The gcd is the classical recursive scheme: strip monomial content, peel off
// variables that occur in only one operand through coefficient gcds, then run
// a subresultant PRS in a common main variable with coefficients in the
// polynomial ring of the remaining variables.

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "lieinv/polynomial.hpp"

namespace lieinv {

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact by zero");
  if (a.is_zero()) return Polynomial();
  if (b.is_constant()) return a * (1 / b.constant_value());
  if (b.is_monomial()) {
    const Term& lt = b.leading_term();
    for (const auto& t : a.terms()) {
      if (!lt.monomial.divides(t.monomial)) return std::nullopt;
    }
    return a.mul_monomial(Monomial() / lt.monomial) * (1 / lt.coefficient);
  }
  const Term& lead = b.leading_term();
  // Cheap rejection: every variable's degree range must fit.
  for (const auto& [v, e] : lead.monomial.factors()) {
    if (a.max_degree(v) < e) return std::nullopt;
  }
  std::vector<Term> quotient;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!lead.monomial.divides(lt.monomial)) return std::nullopt;
    Term q{lt.monomial / lead.monomial, lt.coefficient / lead.coefficient};
    rest -= b.mul_monomial(q.monomial) * q.coefficient;
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(std::move(quotient));
}

namespace {

using UPoly = std::vector<Polynomial>;  // coefficient of y^e at index e

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Polynomial exact(const Polynomial& a, const Polynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("gcd: expected exact division");
  return *q;
}

UPoly divide_coefficients(const UPoly& p, const Polynomial& d) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(exact(c, d));
  return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly pseudo_remainder(UPoly a, const UPoly& b) {
  const int n = degree(b);
  const Polynomial& lb = b.back();
  int steps = degree(a) - n + 1;
  while (!a.empty() && degree(a) >= n) {
    const int shift = degree(a) - n;
    const Polynomial la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= n; ++i) a[shift + i] -= la * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    const Polynomial f = lb.pow(static_cast<unsigned>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

Polynomial gcd_list(const std::vector<Polynomial>& items) {
  Polynomial g;
  for (const auto& c : items) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.primitive() : gcd(g, c);
    if (g.is_constant()) return 1;
  }
  return g;
}

// Subresultant PRS; both inputs primitive in the main variable.
UPoly subresultant_gcd(UPoly a, UPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  Polynomial g = 1;
  Polynomial h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    UPoly r = pseudo_remainder(a, b);
    if (r.empty()) return b;
    if (degree(r) == 0) return UPoly{Polynomial(1)};
    a = std::move(b);
    b = divide_coefficients(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
}

using QPoly = std::vector<Rational>;  // dense univariate, index = exponent

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_remainder(QPoly a, const QPoly& b) {
  const std::size_t n = b.size() - 1;
  while (a.size() > n) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Specialises every variable except y at a point; nullopt when a leading
// coefficient in y vanishes there.
std::optional<QPoly> specialise(const Polynomial& p, Variable y, const std::map<Variable, Rational>& point) {
  const auto coeffs = p.coefficients_in(y);
  QPoly out(coeffs.size());
  for (std::size_t e = 0; e < coeffs.size(); ++e) out[e] = coeffs[e].evaluate(point);
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

// Sufficient test for gcd(a, b) = 1. A common factor involving y keeps its
// y-degree under any specialisation that preserves the leading coefficients
// of a and b in y, so a constant univariate gcd for every shared variable
// rules out every nonconstant common factor.
bool coprime_by_specialisation(const Polynomial& a, const Polynomial& b) {
  const auto va = a.variables();
  const auto vb = b.variables();
  std::vector<Variable> all(va.begin(), va.end());
  all.insert(all.end(), vb.begin(), vb.end());
  std::map<Variable, Rational> point;
  int value = 2;
  for (Variable v : all) {
    if (!point.count(v)) point[v] = Rational(value);
    value = value * 7 % 101 + 3;
  }
  for (Variable y : va) {
    if (!vb.count(y)) continue;
    std::map<Variable, Rational> rest = point;
    rest.erase(y);
    auto ua = specialise(a, y, rest);
    auto ub = specialise(b, y, rest);
    if (!ua || !ub) return false;
    while (!ub->empty()) {
      QPoly r = q_remainder(*ua, *ub);
      ua = std::move(ub);
      ub = std::move(r);
    }
    if (ua->size() > 1) return false;
  }
  return true;
}

Polynomial gcd_without_monomial_content(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return 1;
  if (a.is_monomial() || b.is_monomial()) return 1;

  // Trial division catches the common "one divides the other" case.
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return a.primitive();
  } else {
    if (divide_exact(a, b)) return b.primitive();
  }

  if (coprime_by_specialisation(a, b)) return 1;

  const auto va = a.variables();
  const auto vb = b.variables();
  for (Variable y : va) {
    if (!vb.count(y)) {
      auto coeffs = a.coefficients_in(y);
      coeffs.push_back(b);
      return gcd_list(coeffs);
    }
  }
  for (Variable y : vb) {
    if (!va.count(y)) {
      auto coeffs = b.coefficients_in(y);
      coeffs.push_back(a);
      return gcd_list(coeffs);
    }
  }

  Variable main{};
  int best = std::numeric_limits<int>::max();
  for (Variable y : va) {
    int d = std::max(a.max_degree(y), b.max_degree(y));
    if (d < best) {
      best = d;
      main = y;
    }
  }
  UPoly ua = a.coefficients_in(main);
  UPoly ub = b.coefficients_in(main);
  const Polynomial ca = gcd_list(ua);
  const Polynomial cb = gcd_list(ub);
  const Polynomial content = gcd(ca, cb);
  ua = divide_coefficients(ua, ca);
  ub = divide_coefficients(ub, cb);
  UPoly g = subresultant_gcd(std::move(ua), std::move(ub));
  if (degree(g) > 0) g = divide_coefficients(g, gcd_list(g));
  return (content * Polynomial::from_coefficients(g, main)).primitive();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return 1;
  if (a.has_negative_exponents() || b.has_negative_exponents()) {
    throw std::logic_error("gcd: Laurent input");
  }
  const Monomial ma = a.monomial_content();
  const Monomial mb = b.monomial_content();
  const Monomial common = Monomial::min(ma, mb);
  const Monomial unit_a = Monomial() / ma;
  const Monomial unit_b = Monomial() / mb;
  Polynomial g = gcd_without_monomial_content(a.mul_monomial(unit_a), b.mul_monomial(unit_b));
  return g.mul_monomial(common).primitive();
}

}  // namespace lieinv
