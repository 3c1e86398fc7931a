#include "lieinv/verifier.hpp"

#include <algorithm>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

void require_parameter_free(bool depends) {
  if (depends) throw NotParameterFree("expression involves group parameters or exponential units");
}

// (M_ij) = sum_k c_ij^k x_k as plain polynomials.
std::vector<std::vector<Polynomial>> bracket_polynomials(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      std::vector<Term> terms;
      for (const auto& t : alg.bracket(i, j)) terms.push_back({Monomial::of(Variable::x(t.k)), t.c});
      m[i - 1][j - 1] = Polynomial::from_terms(std::move(terms));
    }
  }
  return m;
}

// X_i P for every i.
std::vector<Polynomial> apply_generators(const Polynomial& p, const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  std::vector<Polynomial> partials(n);
  for (std::size_t j = 0; j < n; ++j) partials[j] = p.partial(Variable::x(static_cast<std::uint32_t>(j + 1)));
  std::vector<Polynomial> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (partials[j].is_zero() || m[i][j].is_zero()) continue;
      out[i] += m[i][j] * partials[j];
    }
  }
  return out;
}

}  // namespace

std::vector<RationalExpression> infinitesimal_check(const RationalExpression& f, const LieAlgebra& alg) {
  require_parameter_free(f.depends_on_kind(VarKind::GroupParam) || f.depends_on_kind(VarKind::ExpUnit));
  const auto m = bracket_polynomials(alg);
  const Polynomial& num = f.numerator();
  const Polynomial& den = f.denominator();
  const auto xn = apply_generators(num, m);
  std::vector<RationalExpression> out(alg.dim());
  if (den.is_constant()) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = RationalExpression::fraction(xn[i], den);
    return out;
  }
  const auto xd = apply_generators(den, m);
  const Polynomial den2 = den * den;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Polynomial top = xn[i] * den - num * xd[i];
    if (!top.is_zero()) out[i] = RationalExpression::fraction(top, den2);
  }
  return out;
}

std::vector<RationalExpression> infinitesimal_check(const PowerProduct& f, const LieAlgebra& alg) {
  if (f.is_rational()) return infinitesimal_check(f.core(), alg);
  require_parameter_free(f.depends_on_kind(VarKind::GroupParam) || f.depends_on_kind(VarKind::ExpUnit));
  const std::size_t n = alg.dim();
  std::vector<RationalExpression> logd(n);
  for (std::size_t j = 0; j < n; ++j) logd[j] = f.log_derivative(Variable::x(static_cast<std::uint32_t>(j + 1)));
  std::vector<RationalExpression> out(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    RationalExpression sum;
    for (std::uint32_t j = 1; j <= n; ++j) {
      if (logd[j - 1].is_zero()) continue;
      for (const auto& t : alg.bracket(i, j))
        sum += RationalExpression(t.c) * RationalExpression::variable(Variable::x(t.k)) * logd[j - 1];
    }
    out[i - 1] = sum;
  }
  return out;
}

bool all_zero(const std::vector<RationalExpression>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const RationalExpression& r) { return r.is_zero(); });
}

std::size_t independence_rank(const std::vector<RationalExpression>& fs, std::size_t dim) {
  std::vector<PowerProduct> pp(fs.begin(), fs.end());
  return independence_rank(pp, dim);
}

std::size_t independence_rank(const std::vector<PowerProduct>& fs, std::size_t dim) {
  if (fs.empty()) return 0;
  ExpPolyMatrix jac(fs.size(), dim);
  for (std::size_t l = 0; l < fs.size(); ++l) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Variable x = Variable::x(static_cast<std::uint32_t>(j + 1));
      // Rows of the log-Jacobian differ from the Jacobian by nonzero row factors.
      jac(l, j) = fs[l].is_rational() ? differentiate(fs[l].core(), x) : fs[l].log_derivative(x);
    }
  }
  return generic_rank(jac);
}

Certificate certify_basis(const std::vector<PowerProduct>& fs, const LieAlgebra& alg, std::optional<std::size_t> expected) {
  Certificate c;
  c.count = fs.size();
  c.expected_count = expected ? *expected : coadjoint_profile(alg).n_invariants;
  bool zero = true;
  for (const auto& f : fs) {
    c.residuals.push_back(infinitesimal_check(f, alg));
    zero = zero && all_zero(c.residuals.back());
  }
  c.jacobian_rank = independence_rank(fs, alg.dim());
  c.passed = zero && c.jacobian_rank == c.expected_count && c.count == c.expected_count;
  return c;
}

Certificate certify_basis(const std::vector<RationalExpression>& fs, const LieAlgebra& alg,
                          std::optional<std::size_t> expected) {
  return certify_basis(std::vector<PowerProduct>(fs.begin(), fs.end()), alg, expected);
}

}  // namespace lieinv
