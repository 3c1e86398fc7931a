#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "lieinv/polynomial.hpp"

namespace lieinv {

// Element of the fraction field of Q[x, theta, v^{+-1}].
//
// Canonical form: numerator and denominator have nonnegative exponents and no
// common factor (monomial or polynomial), all coefficients are integers with
// overall gcd 1, and the denominator has a positive leading coefficient.
// Zero is 0/1. Values are immutable; equality is structural.
class RationalExpression {
 public:
  RationalExpression() : den_(1) {}
  RationalExpression(const Rational& c) : num_(c), den_(1) { normalize_content(); }  // NOLINT
  RationalExpression(int c) : RationalExpression(Rational(c)) {}                     // NOLINT
  RationalExpression(const Polynomial& p);                                            // NOLINT

  // Throws DivisionByZero when den is zero.
  static RationalExpression fraction(const Polynomial& num, const Polynomial& den);
  static RationalExpression variable(Variable v, int exponent = 1);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_constant() && den_.is_constant() && num_.constant_value() == den_.constant_value(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  bool is_polynomial() const { return den_.is_constant(); }
  // Numerator divided by the constant denominator; requires is_polynomial().
  Polynomial as_polynomial() const;

  bool depends_on(Variable v) const { return num_.depends_on(v) || den_.depends_on(v); }
  bool depends_on_kind(VarKind k) const { return num_.depends_on_kind(k) || den_.depends_on_kind(k); }
  std::set<Variable> variables() const;

  RationalExpression operator-() const;
  RationalExpression operator+(const RationalExpression& o) const;
  RationalExpression operator-(const RationalExpression& o) const;
  RationalExpression operator*(const RationalExpression& o) const;
  // Throws DivisionByZero when o is zero.
  RationalExpression operator/(const RationalExpression& o) const;
  RationalExpression& operator+=(const RationalExpression& o) { return *this = *this + o; }
  RationalExpression& operator-=(const RationalExpression& o) { return *this = *this - o; }
  RationalExpression& operator*=(const RationalExpression& o) { return *this = *this * o; }
  RationalExpression pow(int e) const;
  RationalExpression inverse() const;

  bool operator==(const RationalExpression& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string(const VarNames& names = VarNames::standard()) const;

 private:
  RationalExpression(Polynomial num, Polynomial den, bool already_reduced);
  void reduce();
  void clear_monomials();
  void normalize_content();

  Polynomial num_;
  Polynomial den_;
};

// Partial derivative. Differentiating by a group parameter theta_k also
// differentiates its unit v_k = exp(theta_k / q_k): d v_k^m / d theta_k = (m / q_k) v_k^m.
RationalExpression differentiate(const RationalExpression& f, Variable v, const ExpScales& scales = {});

// Simultaneous substitution. Throws SubstitutionPole when the denominator
// vanishes identically or a unit is bound to zero.
RationalExpression substitute(const RationalExpression& f, const std::map<Variable, RationalExpression>& bindings);

// Exact value at a point binding every variable of f; nullopt at a pole.
std::optional<Rational> evaluate(const RationalExpression& f, const std::map<Variable, Rational>& point);

// Sort key used for stable output: (numerator degree + denominator degree, printed form).
bool canonical_less(const RationalExpression& a, const RationalExpression& b);

}  // namespace lieinv
