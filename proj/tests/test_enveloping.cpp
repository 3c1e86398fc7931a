#include "doctest.h"
#include "lieinv/enveloping.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expression_parser.hpp"
#include "lieinv/families.hpp"
#include "lieinv/normalization.hpp"
#include "test_support.hpp"

using namespace lieinv;
using namespace lieinv::testing;

namespace {

NcPolynomial e(std::uint32_t i) { return NcPolynomial::generator(i); }

bool all_zero_nc(const std::vector<NcPolynomial>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const NcPolynomial& p) { return p.is_zero(); });
}

NcPolynomial random_word_poly(Gen& gen, std::uint32_t dim) {
  NcPolynomial p;
  const int terms = gen.integer(1, 3);
  for (int t = 0; t < terms; ++t) {
    NcWord w;
    const int len = gen.integer(0, 3);
    for (int l = 0; l < len; ++l) w.push_back(static_cast<std::uint32_t>(gen.integer(1, static_cast<int>(dim))));
    p.add(w, gen.small_rational());
  }
  return p;
}

}  // namespace

TEST_CASE("symmetrization") {
  CHECK(symmetrize(parse_expression("x1")) == e(1));
  CHECK(symmetrize(parse_expression("x2*x3")) == (e(2) * e(3) + e(3) * e(2)) * Rational(1, 2));
  CHECK(symmetrize(parse_expression("x1^2")) == e(1) * e(1));
  CHECK(symmetrize(parse_expression("x1*x2*x3")).terms().size() == 6);
  CHECK(symmetrize(parse_expression("x1^2*x2")).terms().size() == 3);
  CHECK(symmetrize(parse_expression("3/2*x4")) == e(4) * Rational(3, 2));
  CHECK(symmetrize(parse_expression("7")) == NcPolynomial::scalar(7));
  CHECK_THROWS_AS(symmetrize(parse_expression("x4/x1")), NotPolynomial);
  CHECK_THROWS_AS(symmetrize(parse_expression("x1*t2")), NotPolynomial);

  auto s = symmetrize(parse_expression("x1*x4 - x2*x3"));
  CHECK(s.to_string() == "1/2*e1*e4 - 1/2*e2*e3 - 1/2*e3*e2 + 1/2*e4*e1");
}

TEST_CASE("PBW reduction") {
  const auto g = build_g48(-1);
  CHECK(pbw_reduce(e(3) * e(2), g) == e(2) * e(3) - e(1));
  CHECK(pbw_reduce(e(2) * e(3), g) == e(2) * e(3));
  CHECK(pbw_reduce(e(1) * e(1) * e(4), g) == e(1) * e(1) * e(4));

  auto sym = pbw_reduce(symmetrize(parse_expression("x1*x4 - x2*x3")), g);
  auto by_hand = pbw_reduce(e(1) * e(4) - (e(2) * e(3) + e(3) * e(2)) * Rational(1, 2), g);
  CHECK(sym == by_hand);
  // e1 e4 - e2 e3 + 1/2 e1 in normal form.
  CHECK(sym == e(1) * e(4) - e(2) * e(3) + e(1) * Rational(1, 2));
}

TEST_CASE("PBW reduction is a normal form and respects products") {
  Gen gen(17);
  const std::vector<LieAlgebra> algs{build_g48(-1), build_sl2(), build_t0(4), build_heisenberg()};
  for (const auto& alg : algs) {
    const auto dim = static_cast<std::uint32_t>(alg.dim());
    for (int trial = 0; trial < 15; ++trial) {
      auto a = random_word_poly(gen, dim);
      auto b = random_word_poly(gen, dim);
      auto ra = pbw_reduce(a, alg);
      CHECK(pbw_reduce(ra, alg) == ra);
      for (const auto& [w, c] : ra.terms()) CHECK(std::is_sorted(w.begin(), w.end()));
      CHECK(pbw_reduce(ra * pbw_reduce(b, alg), alg) == pbw_reduce(a * b, alg));
    }
  }
}

TEST_CASE("commutation checks") {
  const auto g = build_g48(-1);
  CHECK(all_zero_nc(commutes_with_generators(e(1), g)));
  CHECK(all_zero_nc(commutes_with_generators(symmetrize(parse_expression("x1*x4 - x2*x3")), g)));

  const auto h = build_heisenberg();
  auto r = commutes_with_generators(e(2), h);
  CHECK(r[0].is_zero());
  CHECK(r[1].is_zero());
  // e2 e3 - e3 e2 = [e2, e3] = e1.
  CHECK(r[2] == e(1));

  auto s = build_sl2();
  auto cas = symmetrize(parse_expression("4*x_e*x_f + x_h^2", s.coordinate_names()));
  CHECK(all_zero_nc(commutes_with_generators(cas, s)));
}

TEST_CASE("polynomial invariants give Casimir operators") {
  std::vector<LieAlgebra> algs{build_g48(-1), build_heisenberg(), build_sl2(), build_abelian(3)};
  for (std::size_t n = 2; n <= 5; ++n) {
    algs.push_back(build_t0(n));
    algs.push_back(build_t(n));
  }
  for (const auto& alg : algs) {
    CAPTURE(alg.name());
    auto basis = polynomialize(normalize(inner_automorphism_matrix(alg)));
    REQUIRE(basis.certified);
    for (const auto& f : basis.invariants) {
      if (!f.is_polynomial()) continue;
      CHECK(all_zero_nc(commutes_with_generators(symmetrize(f), alg)));
    }
  }
}

TEST_CASE("symmetrize is linear on scalars") {
  Gen gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = gen.polynomial(4, 3, 3);
    auto c = gen.small_rational();
    if (c == 0) continue;
    CHECK(symmetrize(p * c) == symmetrize(p) * c);
    CHECK(symmetrize(p + p) == symmetrize(p) * Rational(2));
  }
  for (std::uint32_t i = 1; i <= 5; ++i) CHECK(symmetrize(X(i)) == e(i));
}
