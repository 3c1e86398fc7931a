#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/rational_expression.hpp"

namespace lieinv {

// Formal product core * prod base_i^(p_i/q_i) with non-integer rational
// exponents. Determinant invariants whose exponents are fractional live here;
// when every exponent is an integer the value collapses to its rational core.
class PowerProduct {
 public:
  using Radical = std::pair<RationalExpression, Rational>;

  PowerProduct() : core_(1) {}
  PowerProduct(RationalExpression core) : core_(std::move(core)) {}  // NOLINT(google-explicit-constructor)
  static PowerProduct power(const RationalExpression& base, const Rational& exponent);

  const RationalExpression& core() const { return core_; }
  const std::vector<Radical>& radicals() const { return radicals_; }
  bool is_rational() const { return radicals_.empty(); }
  // Throws NotPolynomial when a fractional power remains.
  const RationalExpression& as_rational() const;

  PowerProduct operator*(const PowerProduct& o) const;
  PowerProduct operator/(const PowerProduct& o) const;
  PowerProduct pow(const Rational& e) const;
  bool operator==(const PowerProduct& o) const { return core_ == o.core_ && radicals_ == o.radicals_; }

  bool depends_on_kind(VarKind kind) const;
  std::set<Variable> variables() const;

  // d/dv of log F, a rational expression even when F is not.
  RationalExpression log_derivative(Variable v, const ExpScales& scales = {}) const;

  std::string to_string(const VarNames& names = VarNames::standard()) const;

 private:
  void absorb(const RationalExpression& base, const Rational& exponent);

  RationalExpression core_;
  std::vector<Radical> radicals_;  // sorted by printed base, exponents non-integer
};

}  // namespace lieinv
