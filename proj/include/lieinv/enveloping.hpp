#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieinv/lie_algebra.hpp"

namespace lieinv {

// Word e_{i1} e_{i2} ... in the universal enveloping algebra; empty is the unit.
using NcWord = std::vector<std::uint32_t>;

struct WordOrder {
  bool operator()(const NcWord& a, const NcWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Finite linear combination of words with rational coefficients.
class NcPolynomial {
 public:
  using TermMap = std::map<NcWord, Rational, WordOrder>;

  NcPolynomial() = default;
  static NcPolynomial word(NcWord w, const Rational& c = 1);
  static NcPolynomial scalar(const Rational& c) { return word({}, c); }
  static NcPolynomial generator(std::uint32_t i) { return word({i}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational scalar_part() const;
  void add(const NcWord& w, const Rational& c);

  NcPolynomial operator+(const NcPolynomial& o) const;
  NcPolynomial operator-(const NcPolynomial& o) const;
  NcPolynomial operator*(const NcPolynomial& o) const;
  NcPolynomial operator*(const Rational& c) const;
  bool operator==(const NcPolynomial& o) const { return terms_ == o.terms_; }

  // "e1*e4 - 1/2*e2*e3" with the algebra's basis names (e<i> when omitted).
  std::string to_string(const std::vector<std::string>& basis = {}) const;

 private:
  TermMap terms_;
};

// Average over the distinct orderings of each monomial's letters.
// Only coordinate variables are allowed; anything else raises NotPolynomial.
NcPolynomial symmetrize(const Polynomial& f);
NcPolynomial symmetrize(const RationalExpression& f);

// PBW normal form: letters nondecreasing, via e_j e_i -> e_i e_j + [e_j, e_i]
// applied at the leftmost inversion.
NcPolynomial pbw_reduce(const NcPolynomial& p, const LieAlgebra& alg);

// pbw_reduce(p e_i - e_i p) for i = 1..dim.
std::vector<NcPolynomial> commutes_with_generators(const NcPolynomial& p, const LieAlgebra& alg);

}  // namespace lieinv
