#include <cmath>

#include "doctest.h"
#include "lieinv/errors.hpp"
#include "lieinv/expression_parser.hpp"
#include "lieinv/matrix.hpp"
#include "test_support.hpp"

using namespace lieinv;
using namespace lieinv::testing;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0/5")) == "0");
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidRational);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidRational);
}

TEST_CASE("field arithmetic examples") {
  CHECK((X(1) / X(2)) * (X(2) / X(1)) == RationalExpression(1));
  CHECK((X(1) + (-X(1))).to_string() == "0");

  auto q = (X(1).pow(2) - X(2).pow(2)) / (X(1) - X(2));
  // Expanding the claimed quotient times the divisor must give back the dividend.
  CHECK((X(1) + X(2)) * (X(1) - X(2)) == X(1).pow(2) - X(2).pow(2));
  CHECK(q == X(1) + X(2));
  CHECK(q.to_string() == "x1 + x2");

  CHECK_THROWS_AS(X(1) / RationalExpression(0), DivisionByZero);
}

TEST_CASE("canonical form") {
  auto e = RationalExpression::fraction(Polynomial(2) * Polynomial::variable(Variable::x(1)),
                                        Polynomial(-4) * Polynomial::variable(Variable::x(2)));
  CHECK(e.to_string() == "-x1/(2*x2)");
  CHECK(e.denominator().leading_coefficient() > 0);
  // Laurent unit powers are cleared into the denominator.
  auto u = V(4, -1) * (X(2) - T(3) * X(1));
  CHECK(!u.numerator().has_negative_exponents());
  CHECK(u.denominator() == Polynomial::variable(Variable::unit(4)));

  Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    auto a = gen.expression();
    CHECK((a - a).to_string() == "0");
  }
}

TEST_CASE("differentiation examples") {
  auto f = X(1) * X(4) - X(2) * X(3);
  CHECK(differentiate(f, Variable::x(4)) == X(1));
  auto g = X(2) * X(3) / X(1);
  CHECK(differentiate(g, Variable::x(1)) == -(X(2) * X(3)) / X(1).pow(2));
  // d(v4^3)/dt4 with q4 = 1, i.e. v4 = exp(t4).
  auto d = differentiate(V(4, 3), Variable::theta(4), {{4, 1}});
  CHECK(d == RationalExpression(3) * V(4, 3));
  // Compare with a five-point finite difference of exp(3 t) at t = 0.1.
  const double t = 0.1;
  const double h = 1e-3;
  auto F = [](double s) { return std::exp(3 * s); };
  const double fd = (-F(t + 2 * h) + 8 * F(t + h) - 8 * F(t - h) + F(t - 2 * h)) / (12 * h);
  const double sym = 3 * std::pow(std::exp(t), 3);
  CHECK(std::abs(fd - sym) < 1e-9);
  // With q4 = 2 the unit is exp(t4 / 2).
  CHECK(differentiate(V(4, 3), Variable::theta(4), {{4, 2}}) == RationalExpression(Rational(3, 2)) * V(4, 3));
  // Mixed theta and unit dependence.
  auto m = T(4) * V(4, -1);
  CHECK(differentiate(m, Variable::theta(4), {}) == V(4, -1) - T(4) * V(4, -1));
}

TEST_CASE("substitution examples") {
  CHECK(substitute(V(4) * X(1), {{Variable::unit(4), RationalExpression(1) / X(1)}}) == RationalExpression(1));
  CHECK(substitute(-T(3) * X(1) + X(2), {{Variable::theta(3), X(2) / X(1)}}).is_zero());
  // I4 at b = -1 with theta2, theta3 normalized away.
  auto i4 = X(4) + T(2) * X(2) - T(3) * X(3) - T(2) * T(3) * X(1);
  auto r = substitute(i4, {{Variable::theta(2), X(3) / X(1)}, {Variable::theta(3), X(2) / X(1)}});
  CHECK(r == X(4) - X(2) * X(3) / X(1));
  CHECK_THROWS_AS(substitute(RationalExpression(1) / (X(1) - X(2)), {{Variable::x(2), X(1)}}), SubstitutionPole);
  CHECK_THROWS_AS(substitute(V(1) * X(1), {{Variable::unit(1), RationalExpression(0)}}), SubstitutionPole);
  // Simultaneous, not sequential.
  CHECK(substitute(X(1) + X(2) * X(2), {{Variable::x(1), X(2)}, {Variable::x(2), X(1)}}) == X(2) + X(1) * X(1));
}

TEST_CASE("ring axioms on random expressions") {
  Gen gen(2024);
  for (int i = 0; i < 100; ++i) {
    auto a = gen.expression();
    auto b = gen.expression();
    auto c = gen.expression();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("product rule on random expressions") {
  Gen gen(7);
  for (int i = 0; i < 100; ++i) {
    auto f = gen.expression();
    auto g = gen.expression();
    auto v = Variable::x(static_cast<std::uint32_t>(gen.integer(1, 3)));
    CHECK(differentiate(f * g, v) == differentiate(f, v) * g + f * differentiate(g, v));
  }
}

TEST_CASE("substitution commutes with differentiation in an untouched variable") {
  Gen gen(99);
  for (int i = 0; i < 60; ++i) {
    auto f = gen.expression(3) + T(1) * gen.expression(3) + V(2) * gen.expression(2);
    std::map<Variable, RationalExpression> bindings{
        {Variable::theta(1), RationalExpression(gen.small_rational()) * X(4)},
        {Variable::unit(2), RationalExpression(gen.integer(1, 5)) * X(5)}};
    auto x = Variable::x(static_cast<std::uint32_t>(gen.integer(1, 3)));
    RationalExpression lhs;
    RationalExpression rhs;
    try {
      lhs = substitute(differentiate(f, x), bindings);
      rhs = differentiate(substitute(f, bindings), x);
    } catch (const SubstitutionPole&) {
      continue;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial gcd") {
  auto p = (X(1) + X(2)) * (X(1) - RationalExpression(3) * X(3));
  auto q = (X(1) + X(2)) * (X(2) * X(3) + RationalExpression(1));
  auto g = gcd(p.as_polynomial(), q.as_polynomial());
  CHECK(RationalExpression(g) == X(1) + X(2));
  CHECK((p / q) == (X(1) - RationalExpression(3) * X(3)) / (X(2) * X(3) + RationalExpression(1)));
  Gen gen(5);
  for (int i = 0; i < 40; ++i) {
    auto a = gen.polynomial(3, 3, 2);
    auto b = gen.polynomial(3, 3, 2);
    auto c = gen.polynomial(3, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    auto g2 = gcd(a * c, b * c);
    CHECK(divide_exact(a * c, g2).has_value());
    CHECK(divide_exact(b * c, g2).has_value());
    CHECK(divide_exact(g2, c.primitive()).has_value());
  }
}

TEST_CASE("printing and parsing round trip") {
  CHECK(parse_expression("x1*x4 - x2*x3") == X(1) * X(4) - X(2) * X(3));
  CHECK(parse_expression("-x2^2 + 2*t1") == -X(2).pow(2) + RationalExpression(2) * T(1));
  CHECK(parse_expression("v4^-3*x1") == V(4, -3) * X(1));
  CHECK(parse_expression("2^3") == RationalExpression(8));
  CHECK(parse_expression("-x1^2") == -(X(1).pow(2)));
  try {
    parse_expression("x1*(x1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 6);
  }
  CHECK_THROWS_AS(parse_expression("x1 + y"), ParseError);
  CHECK_THROWS_AS(parse_expression("x1^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_expression("1/(x1 - x1)"), ParseError);

  Gen gen(31);
  for (int i = 0; i < 100; ++i) {
    auto a = gen.expression(4) * (gen.integer(0, 1) ? V(2, gen.integer(-3, 3)) : RationalExpression(1)) +
             RationalExpression(gen.small_rational()) * T(1);
    CHECK(parse_expression(a.to_string()) == a);
  }
}

TEST_CASE("fractional power products") {
  auto p = parse_power_product("x14*x13^(-3/2)");
  CHECK(!p.is_rational());
  CHECK(p.to_string() == "x14*x13^(-3/2)");
  CHECK(parse_power_product(p.to_string()) == p);
  auto sq = p * p;
  CHECK(sq.is_rational());
  CHECK(sq.as_rational() == X(14).pow(2) / X(13).pow(3));
  // log-derivative of x1^(1/2)*x2 in x1 is 1/(2 x1).
  auto r = PowerProduct::power(X(1), Rational(1, 2)) * PowerProduct(X(2));
  CHECK(r.log_derivative(Variable::x(1)) == RationalExpression(1) / (RationalExpression(2) * X(1)));
  CHECK_THROWS_AS(parse_power_product("x1^(1/2) + x2"), ParseError);
}

TEST_CASE("determinants") {
  ExpPolyMatrix id = ExpPolyMatrix::identity(3);
  CHECK(det_fraction_free(id) == RationalExpression(1));
  ExpPolyMatrix m(2, 2);
  m(0, 0) = X(13);
  m(0, 1) = X(14);
  m(1, 0) = X(23);
  m(1, 1) = X(24);
  // Hand expansion of the 2x2 cofactor formula.
  CHECK(det_fraction_free(m) == X(13) * X(24) - X(14) * X(23));
  ExpPolyMatrix rep(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    rep(0, j) = X(static_cast<std::uint32_t>(j + 1));
    rep(1, j) = X(static_cast<std::uint32_t>(j + 4));
    rep(2, j) = X(static_cast<std::uint32_t>(j + 1));
  }
  CHECK(det_fraction_free(rep).is_zero());

  Gen gen(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    ExpPolyMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = gen.integer(0, 2) == 0 ? RationalExpression(0) : gen.expression(3);
      }
    }
    CHECK(det_bareiss(a) == det_cofactor(a));
  }
}

TEST_CASE("generic rank against sampled numeric rank") {
  CHECK(generic_rank(ExpPolyMatrix(3, 3)) == 0);
  Gen gen(23);
  for (int trial = 0; trial < 30; ++trial) {
    // Product of random n x k and k x m factors has rank <= k.
    const auto n = static_cast<std::size_t>(gen.integer(1, 5));
    const auto m = static_cast<std::size_t>(gen.integer(1, 5));
    const auto k = static_cast<std::size_t>(gen.integer(1, 4));
    ExpPolyMatrix left(n, k);
    ExpPolyMatrix right(k, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j) left(i, j) = RationalExpression(gen.polynomial(4, 2, 1));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j) right(i, j) = RationalExpression(gen.polynomial(4, 2, 1));
    auto prod = left * right;
    CHECK(generic_rank(prod) == sampled_rank(prod, 1000 + static_cast<std::uint64_t>(trial)));
  }
}
