#include "doctest.h"
#include "lieinv/errors.hpp"
#include "lieinv/exp_adjoint.hpp"
#include "lieinv/expression_parser.hpp"
#include "lieinv/families.hpp"
#include "test_support.hpp"

using namespace lieinv;
using namespace lieinv::testing;

namespace {

ExpPolyMatrix from_rows(const std::vector<std::vector<RationalExpression>>& rows) {
  ExpPolyMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

ExpPolyMatrix scale(const ExpPolyMatrix& m, const RationalExpression& s) {
  return m.map([&](const RationalExpression& e) { return e * s; });
}

std::vector<LieAlgebra> exp_corpus() {
  std::vector<LieAlgebra> out;
  out.push_back(build_abelian(3));
  out.push_back(build_heisenberg());
  for (auto b : {Rational(-1), Rational(1, 2), Rational(1)}) out.push_back(build_g48(b));
  out.push_back(build_sl2());
  for (std::size_t n = 2; n <= 4; ++n) {
    out.push_back(build_t0(n));
    out.push_back(build_t(n));
    out.push_back(build_st(n));
  }
  return out;
}

}  // namespace

TEST_CASE("nilpotent series") {
  const Variable th = Variable::theta(1);
  CHECK(exp_nilpotent(ExpPolyMatrix(3, 3), th).is_identity());

  const auto g = build_g48(Rational(1, 2));
  auto e2 = exp_nilpotent(ad_matrix(g, 2), Variable::theta(2));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      RationalExpression want = i == j ? RationalExpression(1) : RationalExpression(0);
      if ((i == 0 && j == 2) || (i == 1 && j == 3)) want = T(2);
      CHECK(e2(i, j) == want);
    }
  }

  // Jordan block: I + tN + t^2 N^2 / 2.
  auto n = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  auto want = ExpPolyMatrix::identity(3) + scale(n, T(1)) + scale(n * n, T(1).pow(2) / RationalExpression(2));
  CHECK(exp_nilpotent(n, th) == want);

  CHECK_THROWS_AS(exp_nilpotent(from_rows({{1, 0}, {0, 0}}), th), NotNilpotent);
}

TEST_CASE("triangular exponentials") {
  const Variable th = Variable::theta(4);
  // The diagonal ad for b = 1/2 with theta -> -theta.
  auto a = from_rows({{Rational(3, 2), 0, 0, 0}, {0, 1, 0, 0}, {0, 0, Rational(1, 2), 0}, {0, 0, 0, 0}});
  auto r = exp_triangular(a, th);
  CHECK(r.q == 2);
  CHECK(r.matrix == from_rows({{V(4, 3), 0, 0, 0}, {0, V(4, 2), 0, 0}, {0, 0, V(4), 0}, {0, 0, 0, 1}}));

  // [[1,1],[0,0]]: by hand X = [[e^t, e^t - 1], [0, 1]].
  auto b = from_rows({{1, 1}, {0, 0}});
  auto rb = exp_triangular(b, Variable::theta(1));
  CHECK(rb.q == 1);
  CHECK(rb.matrix == from_rows({{V(1), V(1) - RationalExpression(1)}, {0, 1}}));
  ExpScales sc{{1, 1}};
  CHECK(differentiate(rb.matrix, Variable::theta(1), sc) == b * rb.matrix);

  // Lower triangular and permuted supports.
  auto low = from_rows({{0, 0, 0}, {2, -1, 0}, {0, 3, 1}});
  auto rl = exp_triangular(low, Variable::theta(1));
  CHECK(differentiate(rl.matrix, Variable::theta(1), ExpScales{{1, rl.q}}) == low * rl.matrix);

  auto n = from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(exp_triangular(n, Variable::theta(1)).matrix == exp_nilpotent(n, Variable::theta(1)));

  CHECK_THROWS_AS(exp_triangular(from_rows({{0, 1}, {-1, 0}}), Variable::theta(1)), UnsupportedSpectrum);
}

TEST_CASE("B(theta) for g4.8 in closed form") {
  for (auto b : {Rational(1, 2), Rational(-1), Rational(1)}) {
    const auto lifted = inner_automorphism_matrix(build_g48(b), {1, 2, 3, 4}, {1, 1, 1, -1});
    // e^{c theta4} is v4^{c q}.
    const int q = lifted.exp_denominators.count(4) ? lifted.exp_denominators.at(4) : 1;
    auto e = [&](const Rational& c) {
      Rational p = c * q;
      REQUIRE(p.get_den() == 1);
      return V(4, static_cast<int>(p.get_num().get_si()));
    };
    const RationalExpression bb(b);
    auto want = from_rows({{e(1 + b), -T(3) * e(1), T(2) * e(b), bb * T(2) * T(3) + RationalExpression(1 + b) * T(1)},
                           {0, e(1), 0, T(2)},
                           {0, 0, e(b), bb * T(3)},
                           {0, 0, 0, 1}});
    CHECK(lifted.B == want);
    CHECK(lifted.exprs[0] == e(1 + b) * X(1));
    CHECK(lifted.exprs[1] == e(1) * (-T(3) * X(1) + X(2)));
    CHECK(lifted.exprs[2] == e(b) * (T(2) * X(1) + X(3)));
    CHECK(lifted.exprs[3] ==
          (bb * T(2) * T(3) + RationalExpression(1 + b) * T(1)) * X(1) + T(2) * X(2) + bb * T(3) * X(3) + X(4));
  }
  auto half = inner_automorphism_matrix(build_g48(Rational(1, 2)));
  CHECK(half.exp_denominators.at(4) == 2);
  CHECK(half.exprs[0].to_string() == "x1*v4^3");
}

TEST_CASE("abelian and Heisenberg lifts") {
  auto ab = inner_automorphism_matrix(build_abelian(3));
  CHECK(ab.param_count() == 0);
  CHECK(ab.B.is_identity());
  for (std::uint32_t j = 1; j <= 3; ++j) CHECK(ab.exprs[j - 1] == X(j));

  auto h = inner_automorphism_matrix(build_heisenberg());
  CHECK(h.param_count() == 2);
  CHECK(h.exprs[0] == X(1));
  // Direct product of exp(t2 ad e2) exp(t3 ad e3), written out by hand.
  auto e2 = from_rows({{1, 0, T(2)}, {0, 1, 0}, {0, 0, 1}});
  auto e3 = from_rows({{1, -T(3), 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(h.B == e2 * e3);
}

TEST_CASE("exp identities over the catalog") {
  for (const auto& alg : exp_corpus()) {
    CAPTURE(alg.name());
    for (std::uint32_t i = 1; i <= alg.dim(); ++i) {
      const auto a = ad_matrix(alg, i);
      const Variable th = Variable::theta(i);
      auto e = exp_one_parameter(a, th);
      const ExpScales sc{{i, e.q}};
      // exp(0) = I.
      std::map<Variable, RationalExpression> zero{{th, 0}, {Variable::unit(i), 1}};
      CHECK(substitute(e.matrix, zero).is_identity());
      CHECK(differentiate(e.matrix, th, sc) == a * e.matrix);
      bool nilpotent = true;
      for (std::size_t d = 0; d < alg.dim(); ++d)
        if (!a(d, d).is_zero()) nilpotent = false;
      if (nilpotent && !a.to_rational().is_zero()) {
        auto pw = a.to_rational();
        for (std::size_t p = 1; p < alg.dim(); ++p) pw = pw * a.to_rational();
        if (!pw.is_zero()) continue;
        // exp((s + u)A) = exp(sA) exp(uA), s and u as two fresh parameters.
        const Variable s = Variable::theta(100), u = Variable::theta(101);
        auto lhs = substitute(exp_nilpotent(a, th), {{th, RationalExpression::variable(s) + RationalExpression::variable(u)}});
        CHECK(lhs == exp_nilpotent(a, s) * exp_nilpotent(a, u));
      }
    }
  }
}

TEST_CASE("triangular homomorphism with units") {
  // exp((s+u)A) = exp(sA) exp(uA) where v_s v_u plays the role of v_{s+u}.
  auto a = from_rows({{1, 1}, {0, 0}});
  auto es = exp_triangular(a, Variable::theta(1)).matrix;
  auto eu = exp_triangular(a, Variable::theta(2)).matrix;
  auto sum = exp_triangular(a, Variable::theta(3)).matrix;
  auto joined = substitute(sum, {{Variable::unit(3), V(1) * V(2)}});
  CHECK(joined == es * eu);
}

TEST_CASE("B(theta) structure") {
  for (const auto& alg : exp_corpus()) {
    CAPTURE(alg.name());
    auto lifted = inner_automorphism_matrix(alg);
    auto det = det_fraction_free(lifted.B);
    // A single unit monomial with coefficient 1.
    CHECK(det.is_polynomial());
    CHECK(det.numerator().terms().size() == 1);
    CHECK(det.denominator().is_constant());
    CHECK(!det.depends_on_kind(VarKind::GroupParam));
    CHECK(!det.depends_on_kind(VarKind::Coordinate));
    CHECK(det.numerator().terms().front().coefficient == det.denominator().constant_value());

    std::map<Variable, RationalExpression> origin;
    for (auto k : lifted.params) {
      origin[Variable::theta(k)] = 0;
      origin[Variable::unit(k)] = 1;
    }
    for (std::uint32_t j = 1; j <= alg.dim(); ++j) {
      CHECK(substitute(lifted.exprs[j - 1], origin) == X(j));
      for (auto v : lifted.exprs[j - 1].variables()) {
        if (v.kind != VarKind::Coordinate) continue;
        CHECK(differentiate(differentiate(lifted.exprs[j - 1], v), v).is_zero());
      }
    }
    CHECK(lifted.param_count() == coadjoint_profile(alg).aut_param_count);
  }
}

TEST_CASE("order and sign overrides") {
  auto g = build_g48(Rational(1, 2));
  CHECK_THROWS(inner_automorphism_matrix(g, {1, 2, 3}));
  CHECK_THROWS(inner_automorphism_matrix(g, {1, 2, 3, 3}));
  auto plain = inner_automorphism_matrix(g, {4, 3, 2, 1}, {1, 1, 1, 1});
  CHECK(plain.generator_order == std::vector<std::uint32_t>{4, 3, 2, 1});
  std::map<Variable, RationalExpression> origin{{Variable::unit(4), 1}};
  for (std::uint32_t k = 1; k <= 4; ++k) origin[Variable::theta(k)] = 0;
  for (std::uint32_t j = 1; j <= 4; ++j) CHECK(substitute(plain.exprs[j - 1], origin) == X(j));
}
