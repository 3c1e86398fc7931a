#include "lieinv/rational_expression.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lieinv/errors.hpp"

namespace lieinv {

RationalExpression::RationalExpression(const Polynomial& p) : num_(p), den_(1) {
  clear_monomials();
  normalize_content();
}

RationalExpression::RationalExpression(Polynomial num, Polynomial den, bool already_reduced)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (!already_reduced) reduce();
}

RationalExpression RationalExpression::fraction(const Polynomial& num, const Polynomial& den) {
  return RationalExpression(num, den, false);
}

RationalExpression RationalExpression::variable(Variable v, int exponent) {
  return RationalExpression(Polynomial::variable(v, exponent));
}

Rational RationalExpression::constant_value() const {
  if (!is_constant()) throw std::logic_error("expression is not constant");
  return num_.constant_value() / den_.constant_value();
}

Polynomial RationalExpression::as_polynomial() const {
  if (!is_polynomial()) throw NotPolynomial("expression has a nonconstant denominator");
  return num_ * (1 / den_.constant_value());
}

std::set<Variable> RationalExpression::variables() const {
  auto out = num_.variables();
  auto d = den_.variables();
  out.insert(d.begin(), d.end());
  return out;
}

// Multiplies numerator and denominator by the monomial that makes every
// exponent nonnegative and removes common monomial factors.
void RationalExpression::clear_monomials() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Monomial m = Monomial::min(num_.monomial_content(), den_.monomial_content());
  if (m.is_one()) return;
  const Monomial shift = Monomial() / m;
  num_ = num_.mul_monomial(shift);
  den_ = den_.mul_monomial(shift);
}

void RationalExpression::normalize_content() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const Integer l = lcm(num_.denominator_lcm(), den_.denominator_lcm());
  const Integer g = gcd(num_.numerator_gcd(), den_.numerator_gcd());
  Rational scale(l, g);
  scale.canonicalize();
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

void RationalExpression::reduce() {
  clear_monomials();
  if (!den_.is_constant() && !den_.is_monomial() && !num_.is_zero()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  normalize_content();
}

RationalExpression RationalExpression::operator-() const {
  RationalExpression r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpression RationalExpression::operator+(const RationalExpression& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_ == o.den_) return fraction(num_ + o.num_, den_);
  if (den_.is_constant() && o.den_.is_constant()) {
    return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  const Polynomial g = gcd(den_, o.den_);
  const Polynomial a = *divide_exact(den_, g);
  const Polynomial b = *divide_exact(o.den_, g);
  return fraction(num_ * b + o.num_ * a, a * o.den_);
}

RationalExpression RationalExpression::operator-(const RationalExpression& o) const { return *this + (-o); }

RationalExpression RationalExpression::operator*(const RationalExpression& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_one()) return *this;
  if (is_one()) return o;
  if (is_polynomial() && o.is_polynomial()) return fraction(num_ * o.num_, den_ * o.den_);
  // Cross-cancel before multiplying; operands are already reduced.
  const Polynomial g1 = gcd(num_, o.den_);
  const Polynomial g2 = gcd(o.num_, den_);
  Polynomial n = *divide_exact(num_, g1) * *divide_exact(o.num_, g2);
  Polynomial d = *divide_exact(den_, g2) * *divide_exact(o.den_, g1);
  RationalExpression r(std::move(n), std::move(d), true);
  r.clear_monomials();
  r.normalize_content();
  return r;
}

RationalExpression RationalExpression::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RationalExpression r(den_, num_, true);
  r.normalize_content();
  return r;
}

RationalExpression RationalExpression::operator/(const RationalExpression& o) const {
  if (o.is_zero()) throw DivisionByZero();
  return *this * o.inverse();
}

RationalExpression RationalExpression::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalExpression r(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), true);
  r.normalize_content();
  return r;
}

std::string RationalExpression::to_string(const VarNames& names) const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  bool bare = den_.is_constant() ||
              (den_.is_monomial() && den_.leading_coefficient() == 1 && den_.leading_term().monomial.factors().size() == 1);
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

// ------------------------------------------------------------ operations

RationalExpression differentiate(const RationalExpression& f, Variable v, const ExpScales& scales) {
  auto dpoly = [&](const Polynomial& p) {
    Polynomial d = p.partial(v);
    if (v.kind == VarKind::GroupParam) {
      const Variable unit = Variable::unit(v.index);
      if (p.depends_on(unit)) {
        auto it = scales.find(v.index);
        const int q = it == scales.end() ? 1 : it->second;
        std::vector<Term> extra;
        for (const auto& t : p.terms()) {
          const int m = t.monomial.exponent(unit);
          if (m == 0) continue;
          Rational factor(m, q);
          factor.canonicalize();
          extra.push_back({t.monomial, t.coefficient * factor});
        }
        d += Polynomial::from_terms(std::move(extra));
      }
    }
    return d;
  };
  const Polynomial dn = dpoly(f.numerator());
  if (f.denominator().is_constant()) return RationalExpression::fraction(dn, f.denominator());
  const Polynomial dd = dpoly(f.denominator());
  return RationalExpression::fraction(dn * f.denominator() - f.numerator() * dd, f.denominator() * f.denominator());
}

namespace {

struct Fraction {
  Polynomial num;
  Polynomial den;
};

// Substitutes into a polynomial with nonnegative exponents, keeping a single
// common denominator: each bound variable y with binding p/q and maximal
// degree d contributes p^e q^(d-e).
Fraction substitute_poly(const Polynomial& poly, const std::map<Variable, RationalExpression>& bindings) {
  std::map<Variable, int> degrees;
  for (const auto& [v, b] : bindings) {
    if (poly.depends_on(v)) degrees[v] = poly.max_degree(v);
  }
  if (degrees.empty()) return {poly, 1};

  std::map<std::pair<Variable, int>, Polynomial> num_pow;
  std::map<std::pair<Variable, int>, Polynomial> den_pow;
  auto power = [](std::map<std::pair<Variable, int>, Polynomial>& cache, Variable v, const Polynomial& base, int e) {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Polynomial p = base.pow(static_cast<unsigned>(e));
    cache.emplace(key, p);
    return p;
  };

  std::vector<Term> acc;
  for (const auto& t : poly.terms()) {
    Monomial rest;
    Polynomial factor = 1;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto dit = degrees.find(v);
      if (dit == degrees.end()) {
        rest = rest * Monomial::of(v, e);
        continue;
      }
      const RationalExpression& b = bindings.at(v);
      factor *= power(num_pow, v, b.numerator(), e);
      if (dit->second - e > 0) factor *= power(den_pow, v, b.denominator(), dit->second - e);
    }
    for (const auto& [v, d] : degrees) {
      if (t.monomial.exponent(v) == 0) {
        factor *= power(den_pow, v, bindings.at(v).denominator(), d);
      }
    }
    for (const auto& ft : factor.terms()) acc.push_back({ft.monomial * rest, ft.coefficient * t.coefficient});
  }
  Polynomial den = 1;
  for (const auto& [v, d] : degrees) den *= power(den_pow, v, bindings.at(v).denominator(), d);
  return {Polynomial::from_terms(std::move(acc)), den};
}

}  // namespace

RationalExpression substitute(const RationalExpression& f, const std::map<Variable, RationalExpression>& bindings) {
  for (const auto& [v, b] : bindings) {
    if (v.kind == VarKind::ExpUnit && b.is_zero() && f.depends_on(v)) {
      throw SubstitutionPole("exponential unit " + VarNames::standard().name(v) + " bound to zero");
    }
  }
  Fraction n = substitute_poly(f.numerator(), bindings);
  Fraction d = substitute_poly(f.denominator(), bindings);
  Polynomial den = n.den * d.num;
  if (den.is_zero()) throw SubstitutionPole("denominator vanishes after substitution");
  return RationalExpression::fraction(n.num * d.den, den);
}

std::optional<Rational> evaluate(const RationalExpression& f, const std::map<Variable, Rational>& point) {
  const Rational d = f.denominator().evaluate(point);
  if (d == 0) return std::nullopt;
  return f.numerator().evaluate(point) / d;
}

bool canonical_less(const RationalExpression& a, const RationalExpression& b) {
  const int da = a.numerator().total_degree() + a.denominator().total_degree();
  const int db = b.numerator().total_degree() + b.denominator().total_degree();
  if (da != db) return da < db;
  return a.to_string() < b.to_string();
}

}  // namespace lieinv
