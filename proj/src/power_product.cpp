#include "lieinv/power_product.hpp"

#include <algorithm>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

int to_int(const Rational& q) { return static_cast<int>(q.get_num().get_si()); }

// Single variable power or a plain number prints without parentheses.
bool is_atomic(const RationalExpression& e) {
  if (!e.is_polynomial()) return false;
  if (e.is_constant()) return e.constant_value() >= 0 && is_integer(e.constant_value());
  const Polynomial& n = e.numerator();
  return n.is_monomial() && n.leading_coefficient() == 1 && n.leading_term().monomial.factors().size() == 1 &&
         e.denominator().constant_value() == 1;
}

std::string wrapped(const RationalExpression& e, const VarNames& names) {
  std::string s = e.to_string(names);
  return is_atomic(e) ? s : "(" + s + ")";
}

}  // namespace

PowerProduct PowerProduct::power(const RationalExpression& base, const Rational& exponent) {
  PowerProduct p;
  p.absorb(base, exponent);
  return p;
}

const RationalExpression& PowerProduct::as_rational() const {
  if (!is_rational()) throw NotPolynomial("expression contains a fractional power");
  return core_;
}

void PowerProduct::absorb(const RationalExpression& base, const Rational& exponent) {
  if (exponent == 0) return;
  if (base.is_zero()) {
    if (exponent < 0) throw DivisionByZero();
    core_ = 0;
    radicals_.clear();
    return;
  }
  if (is_integer(exponent)) {
    core_ *= base.pow(to_int(exponent));
    return;
  }
  auto it = std::find_if(radicals_.begin(), radicals_.end(), [&](const Radical& r) { return r.first == base; });
  if (it == radicals_.end()) {
    radicals_.emplace_back(base, exponent);
    std::sort(radicals_.begin(), radicals_.end(),
              [](const Radical& a, const Radical& b) { return a.first.to_string() < b.first.to_string(); });
    return;
  }
  it->second += exponent;
  if (is_integer(it->second)) {
    const RationalExpression b = it->first;
    const int e = to_int(it->second);
    radicals_.erase(it);
    core_ *= b.pow(e);
  }
}

PowerProduct PowerProduct::operator*(const PowerProduct& o) const {
  PowerProduct r = *this;
  r.core_ *= o.core_;
  for (const auto& [b, e] : o.radicals_) r.absorb(b, e);
  return r;
}

PowerProduct PowerProduct::operator/(const PowerProduct& o) const { return *this * o.pow(-1); }

PowerProduct PowerProduct::pow(const Rational& e) const {
  PowerProduct r;
  r.absorb(core_, e);
  for (const auto& [b, x] : radicals_) r.absorb(b, x * e);
  return r;
}

bool PowerProduct::depends_on_kind(VarKind kind) const {
  if (core_.depends_on_kind(kind)) return true;
  return std::any_of(radicals_.begin(), radicals_.end(),
                     [kind](const Radical& r) { return r.first.depends_on_kind(kind); });
}

std::set<Variable> PowerProduct::variables() const {
  auto out = core_.variables();
  for (const auto& [b, e] : radicals_) {
    auto v = b.variables();
    out.insert(v.begin(), v.end());
  }
  return out;
}

RationalExpression PowerProduct::log_derivative(Variable v, const ExpScales& scales) const {
  RationalExpression sum = differentiate(core_, v, scales) / core_;
  for (const auto& [b, e] : radicals_) sum += RationalExpression(e) * differentiate(b, v, scales) / b;
  return sum;
}

std::string PowerProduct::to_string(const VarNames& names) const {
  if (radicals_.empty()) return core_.to_string(names);
  std::string out;
  if (core_ == RationalExpression(-1)) {
    out = "-";
  } else if (!core_.is_one()) {
    const bool bare = core_.is_polynomial() && core_.numerator().is_monomial() &&
                      core_.denominator().constant_value() == 1;
    out = (bare ? core_.to_string(names) : "(" + core_.to_string(names) + ")") + "*";
  }
  for (std::size_t i = 0; i < radicals_.size(); ++i) {
    if (i > 0) out += "*";
    out += wrapped(radicals_[i].first, names) + "^(" + lieinv::to_string(radicals_[i].second) + ")";
  }
  return out;
}

}  // namespace lieinv
