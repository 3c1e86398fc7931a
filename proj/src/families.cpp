#include "lieinv/families.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

std::string pair_name(std::size_t n, std::size_t i, std::size_t j) {
  if (n <= 9) return "e" + std::to_string(i) + std::to_string(j);
  return "e" + std::to_string(i) + "_" + std::to_string(j);
}

void add_nilradical(LieAlgebra& alg, std::size_t n) {
  using TI = TriangularIndex;
  // [e_ij, e_jl] = e_il; every other pair commutes or follows by antisymmetry.
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t l = j + 1; l <= n; ++l) alg.add_bracket(TI::flat(n, i, j), TI::flat(n, j, l), TI::flat(n, i, l), 1);
}

RationalExpression coord(std::size_t n, std::size_t i, std::size_t j) {
  return RationalExpression::variable(Variable::x(TriangularIndex::flat(n, i, j)));
}

// Matrix (x_ij), i = r1..r2, j = c1..c2; entries off the strict upper triangle are 0.
ExpPolyMatrix block(std::size_t n, std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
  ExpPolyMatrix m(r2 - r1 + 1, c2 - c1 + 1);
  for (std::size_t i = r1; i <= r2; ++i)
    for (std::size_t j = c1; j <= c2; ++j)
      if (i < j) m(i - r1, j - c1) = coord(n, i, j);
  return m;
}

}  // namespace

std::uint32_t TriangularIndex::flat(std::size_t n, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= n)) throw IndexOutOfRange("pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  // pairs before row i: sum_{r<i} (n - r)
  const std::size_t before = (i - 1) * n - (i - 1) * i / 2;
  return static_cast<std::uint32_t>(before + (j - i));
}

std::pair<std::size_t, std::size_t> TriangularIndex::pair(std::size_t n, std::uint32_t flat) {
  std::size_t k = flat;
  for (std::size_t i = 1; i < n; ++i) {
    if (k <= n - i) return {i, i + k};
    k -= n - i;
  }
  throw IndexOutOfRange("flat index " + std::to_string(flat));
}

GammaMatrix::GammaMatrix(std::size_t n, std::vector<std::vector<Rational>> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 2) throw InvalidGamma("n must be at least 2");
  if (rows_.size() > n - 1) throw InvalidGamma("s must not exceed n - 1");
  QMatrix check(rows_.size() + 1, n);
  for (std::size_t p = 0; p < rows_.size(); ++p) {
    if (rows_[p].size() != n) throw InvalidGamma("row " + std::to_string(p + 1) + " has " +
                                                 std::to_string(rows_[p].size()) + " entries, expected " +
                                                 std::to_string(n));
    Rational sum = 0;
    for (const auto& g : rows_[p]) sum += g;
    for (auto& g : rows_[p]) g -= sum / Rational(static_cast<unsigned long>(n));
    for (std::size_t i = 0; i < n; ++i) check(p, i) = rows_[p][i];
  }
  for (std::size_t i = 0; i < n; ++i) check(rows_.size(), i) = 1;
  if (check.rank() != rows_.size() + 1) {
    throw InvalidGamma("gamma rows together with the all-ones row are linearly dependent");
  }
}

GammaMatrix parse_gamma_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw InputError("gamma.n: expected an integer");
  }
  const auto n = doc.at("n").get<long long>();
  if (n < 2) throw InputError("gamma.n: expected n >= 2");
  std::vector<std::vector<Rational>> rows;
  if (doc.contains("gamma")) {
    const json& g = doc.at("gamma");
    if (!g.is_array()) throw InputError("gamma.gamma: expected an array of rows");
    for (std::size_t p = 0; p < g.size(); ++p) {
      if (!g[p].is_array()) throw InputError("gamma.gamma[" + std::to_string(p) + "]: expected an array");
      std::vector<Rational> row;
      for (std::size_t i = 0; i < g[p].size(); ++i) {
        const std::string where = "gamma.gamma[" + std::to_string(p) + "][" + std::to_string(i) + "]";
        const json& v = g[p][i];
        try {
          if (v.is_string()) {
            row.push_back(parse_rational(v.get<std::string>()));
          } else if (v.is_number_integer()) {
            row.emplace_back(v.get<long>());
          } else {
            throw InputError(where + ": invalid rational, expected a string \"p/q\"");
          }
        } catch (const InvalidRational& e) {
          throw InputError(where + ": " + e.what());
        }
      }
      rows.push_back(std::move(row));
    }
  }
  if (doc.contains("s") && (!doc.at("s").is_number_integer() || doc.at("s").get<std::size_t>() != rows.size())) {
    throw InputError("gamma.s: does not match the number of rows");
  }
  try {
    return GammaMatrix(static_cast<std::size_t>(n), std::move(rows));
  } catch (const InvalidGamma& e) {
    throw InputError(std::string("gamma: ") + e.what());
  }
}

GammaMatrix load_gamma(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_gamma_json(ss.str());
}

ReducedGamma reduce_gamma(const GammaMatrix& gamma) {
  const std::size_t n = gamma.n();
  const std::size_t s = gamma.s();
  const std::size_t half = n / 2;
  // [D | I] with D_pk = gamma_{p,n-k+1} - gamma_{pk}.
  QMatrix aug(s, half + s);
  for (std::size_t p = 1; p <= s; ++p) {
    for (std::size_t k = 1; k <= half; ++k) aug(p - 1, k - 1) = gamma(p, n - k + 1) - gamma(p, k);
    aug(p - 1, half + p - 1) = 1;
  }
  const auto pivots = aug.rref();

  ReducedGamma out;
  out.lambda = QMatrix(s, s);
  for (std::size_t p = 0; p < s; ++p)
    for (std::size_t q = 0; q < s; ++q) out.lambda(p, q) = aug(p, half + q);
  for (auto c : pivots) {
    if (c < half) out.k_values.push_back(c + 1);
  }
  out.s_prime = out.k_values.size();

  std::vector<std::vector<Rational>> rows(s, std::vector<Rational>(n));
  out.mu.assign(s, 0);
  for (std::size_t p = 0; p < s; ++p) {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t q = 0; q < s; ++q) rows[p][i] += out.lambda(p, q) * gamma.rows()[q][i];
      sum += rows[p][i];
    }
    out.mu[p] = -sum / Rational(static_cast<unsigned long>(n));
    for (auto& g : rows[p]) g += out.mu[p];
  }
  out.gamma = GammaMatrix(n, std::move(rows));
  return out;
}

LieAlgebra build_t0(std::size_t n) { return build_tgamma(n, GammaMatrix(n, {})); }

LieAlgebra build_tgamma(std::size_t n, const GammaMatrix& gamma) {
  if (n < 2) throw InvalidGamma("n must be at least 2");
  if (gamma.n() != n) throw InvalidGamma("gamma has " + std::to_string(gamma.n()) + " columns, expected " + std::to_string(n));
  const std::size_t m = TriangularIndex::count(n);
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) basis.push_back(pair_name(n, i, j));
  for (std::size_t p = 1; p <= gamma.s(); ++p) basis.push_back("f" + std::to_string(p));
  LieAlgebra alg(m + gamma.s(), std::move(basis));
  add_nilradical(alg, n);
  for (std::size_t p = 1; p <= gamma.s(); ++p) {
    const auto f = static_cast<std::uint32_t>(m + p);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const auto e = TriangularIndex::flat(n, i, j);
        // [f_p, e_ij] = (gamma_pi - gamma_pj) e_ij, stored as [e_ij, f_p].
        alg.add_bracket(e, f, e, -(gamma(p, i) - gamma(p, j)));
      }
    }
  }
  alg.set_name(gamma.s() == 0 ? "t0(" + std::to_string(n) + ")" : "tgamma(" + std::to_string(n) + ")");
  return alg;
}

LieAlgebra build_st(std::size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t p = 1; p < n; ++p) {
    std::vector<Rational> row(n);
    row[p - 1] = 1;
    row[n - 1] = -1;
    rows.push_back(std::move(row));
  }
  LieAlgebra alg = build_tgamma(n, GammaMatrix(n, std::move(rows)));
  alg.set_name("st(" + std::to_string(n) + ")");
  return alg;
}

LieAlgebra build_t(std::size_t n) {
  const LieAlgebra st = build_st(n);
  auto basis = st.basis();
  basis.push_back("z");
  LieAlgebra alg(st.dim() + 1, std::move(basis));
  for (const auto& [ij, terms] : st.upper_brackets())
    for (const auto& t : terms) alg.add_bracket(ij.first, ij.second, t.k, t.c);
  alg.set_name("t(" + std::to_string(n) + ")");
  return alg;
}

std::vector<PowerProduct> TheoremBasis::all() const {
  std::vector<PowerProduct> out = determinant_part;
  for (const auto& e : element_part) out.emplace_back(e);
  return out;
}

TheoremBasis theorem_basis(std::size_t n, const ReducedGamma& reduced) {
  const GammaMatrix& g = reduced.gamma;
  const std::size_t half = n / 2;
  const std::size_t m = TriangularIndex::count(n);
  auto corner = [&](std::size_t k) { return det_fraction_free(block(n, 1, k, n - k + 1, n)); };

  std::vector<RationalExpression> corners(half + 1);
  for (std::size_t k = 1; k <= half; ++k) corners[k] = corner(k);

  TheoremBasis out;
  for (std::size_t k = 1; k <= half; ++k) {
    if (std::find(reduced.k_values.begin(), reduced.k_values.end(), k) != reduced.k_values.end()) continue;
    PowerProduct term(corners[k]);
    for (std::size_t q = 1; q <= reduced.s_prime; ++q) {
      Rational alpha = 0;
      for (std::size_t kk = 1; kk <= k; ++kk) alpha -= g(q, n - kk + 1) - g(q, kk);
      term = term * PowerProduct::power(corners[reduced.k_values[q - 1]], alpha);
    }
    out.determinant_part.push_back(term);
  }

  for (std::size_t p = reduced.s_prime + 1; p <= g.s(); ++p) {
    RationalExpression expr = RationalExpression::variable(Variable::x(static_cast<std::uint32_t>(m + p)));
    for (std::size_t k = 1; k <= half; ++k) {
      const std::size_t kappa = n - k + 1;
      const Rational weight = g(p, k) - g(p, k + 1);
      if (weight == 0) continue;
      RationalExpression inner;
      for (std::size_t i = k + 1; i < kappa; ++i) {
        // [[x_{1..k, i}, x_{1..k, kappa..n}], [0, x_{i, kappa..n}]]
        ExpPolyMatrix b(k + 1, k + 1);
        for (std::size_t r = 1; r <= k; ++r) {
          b(r - 1, 0) = coord(n, r, i);
          for (std::size_t c = 0; c < k; ++c) b(r - 1, c + 1) = coord(n, r, kappa + c);
        }
        for (std::size_t c = 0; c < k; ++c) b(k, c + 1) = coord(n, i, kappa + c);
        inner += det_fraction_free(b);
      }
      const RationalExpression sign = k % 2 == 1 ? 1 : -1;
      expr += sign * RationalExpression(weight) * inner / corners[k];
    }
    out.element_part.push_back(expr);
  }
  return out;
}

LieAlgebra build_abelian(std::size_t n) {
  LieAlgebra alg(n);
  alg.set_name("abelian(" + std::to_string(n) + ")");
  return alg;
}

LieAlgebra build_heisenberg() {
  LieAlgebra alg(3);
  alg.add_bracket(2, 3, 1, 1);
  alg.set_name("g3.1");
  return alg;
}

LieAlgebra build_g48(const Rational& b) {
  LieAlgebra alg(4);
  alg.add_bracket(2, 3, 1, 1);
  alg.add_bracket(1, 4, 1, 1 + b);
  alg.add_bracket(2, 4, 2, 1);
  alg.add_bracket(3, 4, 3, b);
  alg.set_generator_signs({1, 1, 1, -1});
  alg.set_name("g4.8(b=" + to_string(b) + ")");
  return alg;
}

LieAlgebra build_sl2() {
  LieAlgebra alg(3, {"e", "h", "f"});
  alg.add_bracket(1, 2, 1, -2);  // [e, h] = -2e
  alg.add_bracket(1, 3, 2, 1);   // [e, f] = h
  alg.add_bracket(2, 3, 3, -2);  // [h, f] = -2f
  alg.set_name("sl2");
  return alg;
}

std::vector<std::string> catalog_names() { return {"abelian", "g3.1", "g4.8", "sl2", "t0", "t", "st"}; }

LieAlgebra catalog_algebra(const std::string& name, const std::map<std::string, Rational>& params) {
  auto param = [&](const std::string& key, const Rational& fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  auto size_param = [&](const std::string& key, long fallback, long lo, long hi) {
    const Rational v = param(key, fallback);
    if (v.get_den() != 1 || v < lo || v > hi) {
      throw InputError("parameter " + key + " must be an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
    return static_cast<std::size_t>(v.get_num().get_si());
  };
  for (const auto& [key, value] : params) {
    const bool known = (key == "n" && (name == "abelian" || name == "t0" || name == "t" || name == "st")) ||
                       (key == "b" && name == "g4.8");
    if (!known) throw InputError("algebra " + name + " has no parameter " + key);
  }
  if (name == "abelian") return build_abelian(size_param("n", 3, 1, 64));
  if (name == "g3.1" || name == "heisenberg") return build_heisenberg();
  if (name == "g4.8") return build_g48(param("b", -1));
  if (name == "sl2") return build_sl2();
  if (name == "t0") return build_t0(size_param("n", 4, 2, 7));
  if (name == "t") return build_t(size_param("n", 4, 2, 7));
  if (name == "st") return build_st(size_param("n", 4, 2, 7));
  throw InputError("unknown catalog algebra '" + name + "'");
}

}  // namespace lieinv
