#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/rational.hpp"
#include "lieinv/variable.hpp"

namespace lieinv {

// Power product of variables. Factors are sorted by variable and carry
// nonzero exponents; exponents may be negative (Laurent monomials), which the
// rational expression layer clears before any gcd or division is attempted.
class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;
  static Monomial of(Variable v, int exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int degree() const { return degree_; }
  int exponent(Variable v) const;
  bool has_negative_exponent() const;

  Monomial operator*(const Monomial& other) const;
  // Exponent-wise difference; may produce negative exponents.
  Monomial operator/(const Monomial& other) const;
  // True when other / *this has no negative exponents.
  bool divides(const Monomial& other) const;
  Monomial without(Variable v) const;
  Monomial pow(int e) const;

  // Exponent-wise minimum / maximum (monomial gcd and lcm for nonnegative exponents).
  static Monomial min(const Monomial& a, const Monomial& b);
  static Monomial max(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

 private:
  explicit Monomial(std::vector<Factor> factors);
  std::vector<Factor> factors_;
  int degree_ = 0;
};

// Graded lexicographic comparison with variable order x < theta < v
// (x1 is the most significant variable).
std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse multivariate polynomial with rational coefficients. Terms are kept
// sorted in decreasing graded lexicographic order with no zero coefficients,
// so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Polynomial variable(Variable v, int exponent = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  // Accepts terms in any order, merges duplicates and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;  // requires is_constant()
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  int total_degree() const;

  bool depends_on(Variable v) const;
  bool depends_on_kind(VarKind kind) const;
  std::set<Variable> variables() const;
  // Largest / smallest exponent of v over all terms (0 for absent terms).
  int max_degree(Variable v) const;
  int min_degree(Variable v) const;
  bool has_negative_exponents() const;

  // Monomial gcd of all terms (exponent-wise minimum, may be negative).
  Monomial monomial_content() const;
  Polynomial mul_monomial(const Monomial& m) const;

  // Coefficients with respect to v: result[e] is the coefficient of v^e.
  // Requires nonnegative exponents in v.
  std::vector<Polynomial> coefficients_in(Variable v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, Variable v);

  // Least common multiple of coefficient denominators and gcd of numerators.
  Integer denominator_lcm() const;
  Integer numerator_gcd() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial pow(unsigned e) const;

  // Partial derivative treating every variable (including units) as independent.
  Polynomial partial(Variable v) const;
  // Value at a point; variables missing from the point stay symbolic.
  Polynomial evaluate_partially(const std::map<Variable, Rational>& point) const;
  // Value at a point that binds every variable. Throws std::out_of_range otherwise.
  Rational evaluate(const std::map<Variable, Rational>& point) const;

  bool operator==(const Polynomial& o) const;

  // Scaled to integer coefficients with gcd 1 and a positive leading coefficient.
  Polynomial primitive() const;

  std::string to_string(const VarNames& names = VarNames::standard()) const;

 private:
  std::vector<Term> terms_;
};

// Quotient when b divides a exactly (both with nonnegative exponents), else nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

// Greatest common divisor over Q, normalised by Polynomial::primitive().
// gcd(0, 0) = 0. Inputs must have nonnegative exponents.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lieinv
