#include "lieinv/exp_adjoint.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

// sum over lambda of p_lambda(theta) * exp(lambda * theta); p stored by power.
using QuasiPoly = std::map<Rational, std::vector<Rational>>;

void add_coeff(QuasiPoly& f, const Rational& lambda, std::size_t power, const Rational& c) {
  if (c == 0) return;
  auto& p = f[lambda];
  if (p.size() <= power) p.resize(power + 1);
  p[power] += c;
}

Rational factorial(std::size_t k) {
  Rational r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<unsigned long>(i);
  return r;
}

Rational ipow(const Rational& b, std::size_t e) {
  Rational r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

// exp(lambda*theta) * integral_0^theta exp(-lambda*s) f(s) ds
QuasiPoly integrate_against(const QuasiPoly& f, const Rational& lambda) {
  QuasiPoly out;
  for (const auto& [mu, p] : f) {
    const Rational nu = mu - lambda;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] == 0) continue;
      if (nu == 0) {
        add_coeff(out, lambda, k + 1, p[k] / Rational(static_cast<unsigned long>(k + 1)));
        continue;
      }
      const Rational kf = factorial(k);
      for (std::size_t m = 0; m <= k; ++m) {
        const Rational sign = (k - m) % 2 == 0 ? 1 : -1;
        add_coeff(out, mu, m, p[k] * sign * kf / (factorial(m) * ipow(nu, k - m + 1)));
      }
      const Rational sign = k % 2 == 0 ? 1 : -1;
      add_coeff(out, lambda, 0, -p[k] * sign * kf / ipow(nu, k + 1));
    }
  }
  return out;
}

RationalExpression to_expression(const QuasiPoly& f, Variable theta, int q) {
  std::vector<Term> terms;
  for (const auto& [lambda, p] : f) {
    const Rational scaled = lambda * q;
    const int e = static_cast<int>(scaled.get_num().get_si());
    for (std::size_t m = 0; m < p.size(); ++m) {
      if (p[m] == 0) continue;
      Monomial mono = Monomial::of(theta, static_cast<int>(m));
      if (e != 0) mono = mono * Monomial::of(Variable::unit(theta.index), e);
      terms.push_back({mono, p[m]});
    }
  }
  return RationalExpression(Polynomial::from_terms(std::move(terms)));
}

// Topological order of the off-diagonal support (edge i -> j when A_ij != 0),
// smallest index first. Returns the cycle instead when there is one.
std::vector<std::size_t> triangular_order(const QMatrix& a, std::vector<std::size_t>* cycle) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && a(i, j) != 0) ++indegree[j];
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    done[i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a(i, j) != 0 && --indegree[j] == 0) ready.insert(j);
    }
  }
  if (order.size() == n) return order;
  // Walk predecessors inside the remaining subgraph until a node repeats.
  std::size_t cur = 0;
  while (done[cur]) ++cur;
  std::vector<std::size_t> path;
  std::vector<int> seen(n, -1);
  while (seen[cur] < 0) {
    seen[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != cur && !done[i] && a(i, cur) != 0) {
        cur = i;
        break;
      }
    }
  }
  cycle->assign(path.begin() + seen[cur], path.end());
  std::reverse(cycle->begin(), cycle->end());
  return {};
}

QMatrix constant_matrix(const ExpPolyMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
  if (!a.is_constant()) throw std::invalid_argument(std::string(what) + ": matrix must have rational entries");
  return a.to_rational();
}

bool is_nilpotent(const QMatrix& a) {
  QMatrix p = a;
  for (std::size_t k = 1; k < a.rows(); ++k) p = p * a;
  return a.rows() == 0 || p.is_zero();
}

}  // namespace

ExpPolyMatrix exp_nilpotent(const ExpPolyMatrix& a, Variable theta) {
  const QMatrix q = constant_matrix(a, "exp_nilpotent");
  if (!is_nilpotent(q)) throw NotNilpotent("matrix is not nilpotent");
  const std::size_t n = q.rows();
  ExpPolyMatrix out = ExpPolyMatrix::identity(n);
  QMatrix power = QMatrix::identity(n);
  for (std::size_t m = 1; m < n; ++m) {
    power = power * q;
    if (power.is_zero()) break;
    const RationalExpression coeff = RationalExpression::variable(theta, static_cast<int>(m)) / RationalExpression(factorial(m));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (power(i, j) != 0) out(i, j) += coeff * RationalExpression(power(i, j));
  }
  return out;
}

OneParameterExp exp_triangular(const ExpPolyMatrix& a, Variable theta) {
  const QMatrix q = constant_matrix(a, "exp_triangular");
  const std::size_t n = q.rows();
  std::vector<std::size_t> cycle;
  const auto order = triangular_order(q, &cycle);
  if (order.size() != n) {
    std::ostringstream os;
    os << "no permutation triangularizes the matrix; support cycle";
    for (auto c : cycle) os << " " << c + 1;
    throw UnsupportedSpectrum(os.str());
  }
  Integer l = 1;
  for (std::size_t i = 0; i < n; ++i) l = lcm(l, Integer(q(i, i).get_den()));
  OneParameterExp result{ExpPolyMatrix(n, n), static_cast<int>(l.get_si())};

  for (std::size_t c = 0; c < n; ++c) {
    std::vector<QuasiPoly> x(n);
    for (std::size_t pos = n; pos-- > 0;) {
      const std::size_t i = order[pos];
      QuasiPoly forcing;
      for (std::size_t later = pos + 1; later < n; ++later) {
        const std::size_t j = order[later];
        if (q(i, j) == 0) continue;
        for (const auto& [mu, p] : x[j])
          for (std::size_t k = 0; k < p.size(); ++k) add_coeff(forcing, mu, k, q(i, j) * p[k]);
      }
      QuasiPoly xi = integrate_against(forcing, q(i, i));
      if (i == c) add_coeff(xi, q(i, i), 0, 1);
      x[i] = std::move(xi);
    }
    for (std::size_t i = 0; i < n; ++i) result.matrix(i, c) = to_expression(x[i], theta, result.q);
  }
  return result;
}

OneParameterExp exp_one_parameter(const ExpPolyMatrix& a, Variable theta) {
  const QMatrix q = constant_matrix(a, "exp");
  if (is_nilpotent(q)) return {exp_nilpotent(a, theta), 1};
  return exp_triangular(a, theta);
}

LiftedInvariantSet inner_automorphism_matrix(const LieAlgebra& alg, std::vector<std::uint32_t> order,
                                             std::vector<int> signs) {
  const std::size_t n = alg.dim();
  if (order.empty()) order = alg.generator_order();
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 1u);
  }
  if (signs.empty()) signs = alg.generator_signs();
  if (signs.empty()) signs.assign(n, 1);
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == n;
    for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i + 1;
    if (!perm) throw InputError("generator order is not a permutation of 1.." + std::to_string(n));
    if (signs.size() != n) throw InputError("expected one sign per basis element");
    for (int s : signs)
      if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
  }

  LiftedInvariantSet out;
  out.algebra = alg;
  out.generator_order = order;
  out.signs = signs;
  out.B = ExpPolyMatrix::identity(n);
  for (auto i : order) {
    if (is_central_generator(alg, i)) continue;
    QMatrix a = ad_matrix_q(alg, i);
    if (signs[i - 1] < 0) a = a * Rational(-1);
    auto factor = exp_one_parameter(ExpPolyMatrix(a), Variable::theta(i));
    bool has_unit = false;
    for (std::size_t r = 0; r < n && !has_unit; ++r)
      for (std::size_t c = 0; c < n && !has_unit; ++c) has_unit = factor.matrix(r, c).depends_on(Variable::unit(i));
    if (has_unit) out.exp_denominators[i] = factor.q;
    out.params.push_back(i);
    out.B = out.B * factor.matrix;
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalExpression e;
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.B(i, j).is_zero()) e += RationalExpression::variable(Variable::x(static_cast<std::uint32_t>(i + 1))) * out.B(i, j);
    }
    out.exprs.push_back(e);
  }
  return out;
}

}  // namespace lieinv
