#include "lieinv/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace lieinv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  for (const auto& [v, e] : factors_) degree_ += e;
}

Monomial Monomial::of(Variable v, int exponent) {
  if (exponent == 0) return {};
  return Monomial({{v, exponent}});
}

int Monomial::exponent(Variable v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, Variable x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::has_negative_exponent() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second < 0; });
}

namespace {

template <typename Combine>
std::vector<Monomial::Factor> merge_factors(const std::vector<Monomial::Factor>& a,
                                            const std::vector<Monomial::Factor>& b, Combine combine) {
  std::vector<Monomial::Factor> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    Variable v;
    int ea = 0;
    int eb = 0;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      v = ia->first;
      ea = (ia++)->second;
    } else if (ia == a.end() || ib->first < ia->first) {
      v = ib->first;
      eb = (ib++)->second;
    } else {
      v = ia->first;
      ea = (ia++)->second;
      eb = (ib++)->second;
    }
    if (int e = combine(ea, eb); e != 0) out.emplace_back(v, e);
  }
  return out;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.is_one()) return *this;
  if (is_one()) return other;
  return Monomial(merge_factors(factors_, other.factors_, [](int a, int b) { return a + b; }));
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (other.is_one()) return *this;
  return Monomial(merge_factors(factors_, other.factors_, [](int a, int b) { return a - b; }));
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  for (const auto& [v, e] : other.factors_) {
    if (e < 0 && exponent(v) > e) return false;
  }
  return true;
}

Monomial Monomial::without(Variable v) const {
  std::vector<Factor> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) {
    if (f.first != v) out.push_back(f);
  }
  return Monomial(std::move(out));
}

Monomial Monomial::pow(int e) const {
  if (e == 0) return {};
  std::vector<Factor> out = factors_;
  for (auto& f : out) f.second *= e;
  return Monomial(std::move(out));
}

Monomial Monomial::min(const Monomial& a, const Monomial& b) {
  return Monomial(merge_factors(a.factors_, b.factors_, [](int x, int y) { return std::min(x, y); }));
}

Monomial Monomial::max(const Monomial& a, const Monomial& b) {
  return Monomial(merge_factors(a.factors_, b.factors_, [](int x, int y) { return std::max(x, y); }));
}

std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    if (ib == fb.end() || (ia != fa.end() && ia->first < ib->first)) return ia->second <=> 0;
    if (ia == fa.end() || ib->first < ia->first) return 0 <=> ib->second;
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) { return compare_grlex(a.monomial, b.monomial) > 0; }

}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::variable(Variable v, int exponent) { return monomial(Monomial::of(v, exponent)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].coefficient;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::depends_on(Variable v) const {
  return std::any_of(terms_.begin(), terms_.end(), [v](const Term& t) { return t.monomial.exponent(v) != 0; });
}

bool Polynomial::depends_on_kind(VarKind kind) const {
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) {
      if (f.first.kind == kind) return true;
    }
  }
  return false;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto& t : terms_) {
    for (const auto& f : t.monomial.factors()) out.insert(f.first);
  }
  return out;
}

int Polynomial::max_degree(Variable v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(v);
    d = first ? e : std::max(d, e);
    first = false;
  }
  return d;
}

int Polynomial::min_degree(Variable v) const {
  int d = 0;
  bool first = true;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(v);
    d = first ? e : std::min(d, e);
    first = false;
  }
  return d;
}

bool Polynomial::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.monomial.has_negative_exponent(); });
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].monomial;
  for (std::size_t i = 1; i < terms_.size(); ++i) m = Monomial::min(m, terms_[i].monomial);
  return m;
}

Polynomial Polynomial::mul_monomial(const Monomial& m) const {
  if (m.is_one()) return *this;
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coefficient});
  return p;
}

std::vector<Polynomial> Polynomial::coefficients_in(Variable v) const {
  std::vector<std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(v);
    if (e < 0) throw std::logic_error("coefficients_in: negative exponent");
    if (static_cast<std::size_t>(e) >= buckets.size()) buckets.resize(e + 1);
    buckets[e].push_back({t.monomial.without(v), t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, Variable v) {
  std::vector<Term> terms;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    const Monomial ve = Monomial::of(v, static_cast<int>(e));
    for (const auto& t : coeffs[e].terms_) terms.push_back({t.monomial * ve, t.coefficient});
  }
  return from_terms(std::move(terms));
}

Integer Polynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& t : terms_) l = lcm(l, t.coefficient.get_den());
  return l;
}

Integer Polynomial::numerator_gcd() const {
  Integer g = 0;
  for (const auto& t : terms_) g = gcd(g, t.coefficient.get_num());
  return g;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

namespace {

template <bool Subtract>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    auto c = compare_grlex(ia->monomial, ib->monomial);
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back(*ib++);
      if constexpr (Subtract) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = Subtract ? Rational(ia->coefficient - ib->coefficient) : Rational(ia->coefficient + ib->coefficient);
      if (s != 0) out.push_back({ia->monomial, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) {
    out.push_back(*ib);
    if constexpr (Subtract) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  Polynomial p;
  p.terms_ = merge_terms<false>(terms_, o.terms_);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (o.is_zero()) return *this;
  Polynomial p;
  p.terms_ = merge_terms<true>(terms_, o.terms_);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial()) {
    Polynomial p = mul_monomial(o.terms_[0].monomial);
    if (o.terms_[0].coefficient != 1) {
      for (auto& t : p.terms_) t.coefficient *= o.terms_[0].coefficient;
    }
    return p;
  }
  if (is_monomial()) return o * *this;
  std::vector<Term> products;
  products.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) products.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  }
  return from_terms(std::move(products));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coefficient *= c;
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = 1;
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::partial(Variable v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial.exponent(v);
    if (e == 0) continue;
    out.push_back({t.monomial * Monomial::of(v, -1), t.coefficient * e});
  }
  // Differentiation preserves the relative grlex order of surviving terms.
  Polynomial p;
  p.terms_ = std::move(out);
  return p;
}

Polynomial Polynomial::evaluate_partially(const std::map<Variable, Rational>& point) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    Monomial kept;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = point.find(v);
      if (it == point.end()) {
        kept = kept * Monomial::of(v, e);
        continue;
      }
      Rational b = it->second;
      if (e < 0) {
        if (b == 0) throw std::domain_error("negative power of zero");
        b = 1 / b;
      }
      Rational pw = 1;
      for (int i = 0; i < std::abs(e); ++i) pw *= b;
      c *= pw;
    }
    if (c != 0) out.push_back({kept, c});
  }
  return from_terms(std::move(out));
}

Rational Polynomial::evaluate(const std::map<Variable, Rational>& point) const {
  Polynomial p = evaluate_partially(point);
  if (!p.is_constant()) throw std::out_of_range("evaluate: unbound variable");
  return p.constant_value();
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == o.terms_[i].monomial) || terms_[i].coefficient != o.terms_[i].coefficient) return false;
  }
  return true;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  Rational scale(denominator_lcm(), 1);
  Integer g = numerator_gcd();
  scale /= Rational(g, 1);
  if (terms_[0].coefficient < 0) scale = -scale;
  if (scale == 1) return *this;
  return *this * scale;
}

std::string Polynomial::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational c = negative ? Rational(-t.coefficient) : t.coefficient;
    std::string mono;
    for (const auto& [v, e] : t.monomial.factors()) {
      if (!mono.empty()) mono += "*";
      mono += names.name(v);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += lieinv::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += lieinv::to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace lieinv
