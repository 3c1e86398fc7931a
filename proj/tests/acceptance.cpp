// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values come from hand-written oracles below, not
// from the code paths under test.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "family_oracles.hpp"
#include "lieinv/cli.hpp"
#include "lieinv/enveloping.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/expression_parser.hpp"
#include "lieinv/families.hpp"
#include "lieinv/normalization.hpp"
#include "test_support.hpp"

using namespace lieinv;
using namespace lieinv::testing;

namespace {

// Collects failed checks with a short label so a FAIL line says why.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 3; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 3) s += "; +" + std::to_string(failures_.size() - 3) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

std::string algebra_file(const std::string& name) { return std::string(LIEINV_DATA_DIR) + "/algebras/" + name; }
std::string gamma_file(const std::string& name) { return std::string(LIEINV_DATA_DIR) + "/gamma/" + name; }

ExpPolyMatrix from_rows(const std::vector<std::vector<RationalExpression>>& rows) {
  ExpPolyMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::size_t union_rank(const std::vector<PowerProduct>& a, const std::vector<PowerProduct>& b, std::size_t dim) {
  std::vector<PowerProduct> joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return independence_rank(joint, dim);
}

std::vector<PowerProduct> as_products(const std::vector<RationalExpression>& fs) { return {fs.begin(), fs.end()}; }

ReducedGamma empty_gamma(std::size_t n) { return ReducedGamma{GammaMatrix(n, {}), 0, {}, QMatrix(), {}}; }

// Every catalog algebra at its default parameters plus the named g4.8 cases.
std::vector<LieAlgebra> catalog_corpus() {
  std::vector<LieAlgebra> out;
  for (const auto& name : catalog_names()) out.push_back(catalog_algebra(name));
  for (auto b : {Rational(1, 2), Rational(1), Rational(-1, 3)}) out.push_back(build_g48(b));
  for (std::size_t n = 2; n <= 4; ++n) {
    out.push_back(build_t0(n));
    out.push_back(build_t(n));
    out.push_back(build_st(n));
  }
  return out;
}

// g4.8 lift in closed form: rows of B(theta) with e^{c theta4} written as a power
// of the unit v4 = e^{theta4/q}.
Checks ac1() {
  Checks c;
  const Rational b(1, 2);
  const int q = 2;
  auto e = [&](const Rational& coeff) {
    const Rational p = coeff * q;
    return V(4, static_cast<int>(p.get_num().get_si()));
  };
  const RationalExpression bb(b);
  const auto want_B = from_rows({{e(1 + b), -T(3) * e(1), T(2) * e(b), bb * T(2) * T(3) + RationalExpression(1 + b) * T(1)},
                                 {0, e(1), 0, T(2)},
                                 {0, 0, e(b), bb * T(3)},
                                 {0, 0, 0, 1}});
  const std::vector<RationalExpression> want_I{
      e(1 + b) * X(1), e(1) * (-T(3) * X(1) + X(2)), e(b) * (T(2) * X(1) + X(3)),
      (bb * T(2) * T(3) + RationalExpression(1 + b) * T(1)) * X(1) + T(2) * X(2) + bb * T(3) * X(3) + X(4)};

  const auto lifted = inner_automorphism_matrix(load_algebra(algebra_file("g4.8_bhalf.json")), {1, 2, 3, 4}, {1, 1, 1, -1});
  c.expect(lifted.exp_denominators.count(4) && lifted.exp_denominators.at(4) == q, "unit denominator q = 2");
  c.expect(lifted.B == want_B, "B(theta) entries");
  c.expect(lifted.exprs == want_I, "lifted invariants");

  // Same check through the command-line output, parsed back.
  std::ostringstream out, err;
  const int code = cli::run({"lifted", algebra_file("g4.8_bhalf.json"), "--order", "1,2,3,4", "--signs", "+,+,+,-"}, out, err);
  c.expect(code == 0, "lifted exit code");
  c.expect(out.str().find("v4 = exp(t4/2)") != std::string::npos, "unit line");
  std::istringstream lines(out.str());
  std::string line;
  std::size_t row = 0, seen = 0;
  bool in_b = false;
  while (std::getline(lines, line)) {
    if (line == "B(theta):") {
      in_b = true;
      continue;
    }
    if (in_b && line.rfind("  [", 0) == 0 && row < 4) {
      auto body = line.substr(3, line.size() - 4);
      std::size_t col = 0, start = 0;
      while (col < 4) {
        const auto comma = body.find(", ", start);
        const auto cell = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        c.expect(parse_expression(cell) == want_B(row, col), "printed B entry (" + std::to_string(row + 1) + "," +
                                                                 std::to_string(col + 1) + ")");
        ++col;
        if (comma == std::string::npos) break;
        start = comma + 2;
      }
      c.expect(col == 4, "printed B row width");
      ++row;
      continue;
    }
    in_b = false;
    for (std::size_t j = 1; j <= 4; ++j) {
      const std::string tag = "  I" + std::to_string(j) + " = ";
      if (line.rfind(tag, 0) == 0) {
        c.expect(parse_expression(line.substr(tag.size())) == want_I[j - 1], "printed I" + std::to_string(j));
        ++seen;
      }
    }
  }
  c.expect(row == 4 && seen == 4, "printed B rows and lifted lines");
  return c;
}

Checks ac2() {
  Checks c;
  const auto m1 = load_algebra(algebra_file("g4.8_bm1.json"));
  auto basis = normalize(inner_automorphism_matrix(m1));
  c.expect(basis.certified && basis.invariants.size() == 2, "b = -1 certified with 2 invariants");
  auto poly = polynomialize(basis);
  c.expect(poly.certified, "polynomialized basis certified");
  const std::vector<RationalExpression> reference{X(1), X(1) * X(4) - X(2) * X(3)};
  c.expect(union_rank(as_products(poly.invariants), as_products(reference), 4) == 2, "union rank with reference");
  c.expect(union_rank(as_products(basis.invariants), as_products(reference), 4) == 2, "union rank before clearing");
  for (const auto& f : reference) c.expect(all_zero(infinitesimal_check(f, m1)), "reference residuals");
  for (const auto& f : poly.invariants) c.expect(all_zero(infinitesimal_check(f, m1)), "engine residuals");
  for (const char* f : {"g4.8_bhalf.json", "g4.8_b1.json"}) {
    auto r = normalize(inner_automorphism_matrix(load_algebra(algebra_file(f))));
    c.expect(r.certified && r.invariants.empty(), std::string(f) + " has no invariants");
  }
  return c;
}

Checks ac3() {
  Checks c;
  const auto g = build_g48(-1);
  auto e = [](std::uint32_t i) { return NcPolynomial::generator(i); };
  const auto sym = symmetrize(X(1) * X(4) - X(2) * X(3));
  const auto target = e(1) * e(4) - (e(2) * e(3) + e(3) * e(2)) * Rational(1, 2);
  c.expect(pbw_reduce(sym, g) == pbw_reduce(target, g), "normal forms agree");
  const auto res = commutes_with_generators(sym, g);
  c.expect(res.size() == 4, "one residual per generator");
  c.expect(std::all_of(res.begin(), res.end(), [](const NcPolynomial& p) { return p.is_zero(); }), "zero commutators");
  return c;
}

Checks ac4() {
  Checks c;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto alg = build_t0(n);
    const auto fs = theorem_basis(n, empty_gamma(n)).all();
    const std::string tag = "t0(" + std::to_string(n) + ")";
    c.expect(fs.size() == n / 2, tag + " count");
    c.expect(coadjoint_profile(alg).n_invariants == n / 2, tag + " N_g");
    for (const auto& f : fs) c.expect(all_zero(infinitesimal_check(f, alg)), tag + " residual");
  }
  return c;
}

Checks ac5() {
  Checks c;
  bool branch_one = false, branch_zero = false;
  for (const char* name : {"n3_split.json", "n3_symmetric.json", "n4_split.json", "n4_inner.json", "n4_symmetric.json"}) {
    const auto g = load_gamma(gamma_file(name));
    c.expect(g.s() == 1, std::string(name) + " has s = 1");
    const auto r = reduce_gamma(g);
    (r.s_prime == 1 ? branch_one : branch_zero) = true;
    const auto alg = build_tgamma(g.n(), r.gamma);
    const auto fs = theorem_basis(g.n(), r).all();
    for (const auto& f : fs) c.expect(all_zero(infinitesimal_check(f, alg)), std::string(name) + " residual");
    c.expect(fs.size() == coadjoint_profile(alg).n_invariants, std::string(name) + " count");
  }
  c.expect(branch_one && branch_zero, "both s' branches covered");
  return c;
}

Checks ac6() {
  Checks c;
  std::mt19937_64 rng(6);
  int produced = 0;
  while (produced < 50) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t s = std::min<std::size_t>(std::uniform_int_distribution<std::size_t>(1, 2)(rng), n - 1);
    std::vector<std::vector<Rational>> rows(s, std::vector<Rational>(n));
    for (auto& row : rows) {
      for (auto& x : row) {
        Rational v(std::uniform_int_distribution<int>(-4, 4)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
        v.canonicalize();
        x = v;
      }
    }
    GammaMatrix g;
    try {
      g = GammaMatrix(n, rows);
    } catch (const InvalidGamma&) {
      continue;
    }
    ++produced;
    const auto r = reduce_gamma(g);
    const std::string tag = "gamma #" + std::to_string(produced);
    c.expect(reduced_conditions_hold(r), tag + " conditions");
    c.expect(transform_matches(g, r), tag + " transform");
    const auto twice = reduce_gamma(r.gamma);
    c.expect(twice.gamma == r.gamma && twice.k_values == r.k_values, tag + " idempotent");
  }
  return c;
}

Checks ac7() {
  Checks c;
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto alg = build_t0(n);
    auto engine = normalize(inner_automorphism_matrix(alg));
    const std::string tag = "t0(" + std::to_string(n) + ")";
    c.expect(engine.certified, tag + " engine certified");
    const auto theorem = theorem_basis(n, empty_gamma(n)).all();
    c.expect(union_rank(as_products(engine.invariants), theorem, alg.dim()) == engine.expected_count, tag + " span");
  }
  return c;
}

// Jacobi sum for (i, j, k) component l straight from the table.
Rational jacobi_sum(const LieAlgebra& a, std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
  Rational s;
  for (std::uint32_t m = 1; m <= a.dim(); ++m)
    s += a.c(i, j, m) * a.c(m, k, l) + a.c(j, k, m) * a.c(m, i, l) + a.c(k, i, m) * a.c(m, j, l);
  return s;
}

Checks ac8() {
  Checks c;
  const auto corpus = catalog_corpus();

  // Exponential identities for every generator.
  for (const auto& alg : corpus) {
    for (std::uint32_t i = 1; i <= alg.dim(); ++i) {
      const std::string tag = alg.name() + " e" + std::to_string(i);
      const auto a = ad_matrix(alg, i);
      const Variable th = Variable::theta(i);
      OneParameterExp ex;
      try {
        ex = exp_one_parameter(a, th);
      } catch (const Error&) {
        c.expect(false, tag + " exp failed");
        continue;
      }
      c.expect(substitute(ex.matrix, {{th, 0}, {Variable::unit(i), 1}}).is_identity(), tag + " exp(0) = I");
      c.expect(differentiate(ex.matrix, th, ExpScales{{i, ex.q}}) == a * ex.matrix, tag + " derivative");
      const auto qa = a.to_rational();
      auto power = qa;
      for (std::size_t p = 1; p < alg.dim(); ++p) power = power * qa;
      if (power.is_zero()) {
        const Variable s = Variable::theta(100), u = Variable::theta(101);
        const auto lhs = substitute(exp_nilpotent(a, th), {{th, RationalExpression::variable(s) + RationalExpression::variable(u)}});
        c.expect(lhs == exp_nilpotent(a, s) * exp_nilpotent(a, u), tag + " homomorphism");
      }
    }
  }

  // Certified engine output always passes the independent certificate.
  for (const auto& alg : corpus) {
    auto r = normalize(inner_automorphism_matrix(alg));
    if (r.certified) c.expect(certify_basis(r.invariants, alg).passed, alg.name() + " certify_basis");
    else c.expect(false, alg.name() + " not certified");
  }

  // Seeded Jacobi-violating mutants: one extra bracket term on a catalog algebra.
  std::mt19937_64 rng(8);
  int mutants = 0;
  while (mutants < 20) {
    LieAlgebra m = corpus[std::uniform_int_distribution<std::size_t>(0, corpus.size() - 1)(rng)];
    const auto dim = static_cast<std::uint32_t>(m.dim());
    if (dim < 3) continue;
    auto pick = [&] { return std::uniform_int_distribution<std::uint32_t>(1, dim)(rng); };
    const std::uint32_t i = pick(), j = pick(), k = pick();
    if (i == j) continue;
    int coeff = std::uniform_int_distribution<int>(-3, 3)(rng);
    if (coeff == 0) coeff = 1;
    m.add_bracket(i, j, k, coeff);
    std::vector<std::array<std::uint32_t, 4>> oracle;
    for (std::uint32_t a = 1; a <= dim; ++a)
      for (std::uint32_t b = a + 1; b <= dim; ++b)
        for (std::uint32_t d = b + 1; d <= dim; ++d)
          for (std::uint32_t l = 1; l <= dim; ++l)
            if (jacobi_sum(m, a, b, d, l) != 0) oracle.push_back({a, b, d, l});
    if (oracle.empty()) continue;
    ++mutants;
    const auto report = validate(m);
    std::vector<std::array<std::uint32_t, 4>> found;
    for (const auto& v : report.violations) found.push_back(v.ijkl);
    std::sort(found.begin(), found.end());
    c.expect(found == oracle, "mutant " + std::to_string(mutants) + " of " + m.name());
  }
  return c;
}

Checks ac9() {
  Checks c;
  std::vector<LieAlgebra> targets;
  for (std::size_t n = 2; n <= 7; ++n) targets.push_back(build_t0(n));
  for (std::size_t n = 2; n <= 6; ++n) {
    targets.push_back(build_t(n));
    targets.push_back(build_st(n));
  }
  for (const char* f : {"g4.8_bm1.json", "g4.8_bhalf.json", "g4.8_b1.json", "heisenberg.json", "sl2.json"})
    targets.push_back(load_algebra(algebra_file(f)));
  targets.push_back(build_abelian(3));
  for (const auto& alg : targets) {
    auto r = normalize(inner_automorphism_matrix(alg));
    c.expect(r.certified && r.invariants.size() == coadjoint_profile(alg).n_invariants, alg.name() + " certified");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Checks()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "g4.8 b=1/2 lifted matrix and invariants", ac1},
      {"AC2", "g4.8 invariants for b = -1, 1/2, 1", ac2},
      {"AC3", "g4.8 b=-1 Casimir operator", ac3},
      {"AC4", "determinant basis of t0(n), n = 3..6", ac4},
      {"AC5", "determinant basis with one diagonal element", ac5},
      {"AC6", "gamma reduction on 50 random inputs", ac6},
      {"AC7", "engine and determinant basis agree on t0(3), t0(4)", ac7},
      {"AC8", "exp identities, certification, Jacobi mutants", ac8},
      {"AC9", "certified families t0(n<=7), t/st(n<=6), fixed algebras", ac9},
  };
  bool all = true;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Checks result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && result.ok();
    std::cout << cr.id << " " << (result.ok() ? "PASS" : "FAIL") << " (" << std::fixed << std::setprecision(3) << secs
              << " s) " << cr.title;
    if (!result.ok()) std::cout << ": " << result.summary();
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
