#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/power_product.hpp"

namespace lieinv {

// Row-major enumeration (1,2), (1,3), ..., (1,n), (2,3), ... of the pairs
// i < j, mapped to 1-based flat basis indices.
struct TriangularIndex {
  static std::uint32_t flat(std::size_t n, std::size_t i, std::size_t j);
  static std::pair<std::size_t, std::size_t> pair(std::size_t n, std::uint32_t flat);
  static std::size_t count(std::size_t n) { return n * (n - 1) / 2; }
};

// s x n parameter matrix of the diagonal nilindependent elements. Rows are
// shifted to trace zero on construction; rows plus the all-ones row must be
// linearly independent (InvalidGamma otherwise).
class GammaMatrix {
 public:
  GammaMatrix() = default;
  GammaMatrix(std::size_t n, std::vector<std::vector<Rational>> rows);

  std::size_t n() const { return n_; }
  std::size_t s() const { return rows_.size(); }
  const Rational& operator()(std::size_t p, std::size_t i) const { return rows_[p - 1][i - 1]; }  // 1-based
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  bool operator==(const GammaMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Rational>> rows_;
};

// JSON: {"s": 1, "n": 4, "gamma": [["1","0","0","-1"]]}
GammaMatrix parse_gamma_json(std::string_view text);
GammaMatrix load_gamma(const std::string& path);

struct ReducedGamma {
  GammaMatrix gamma;
  std::size_t s_prime = 0;
  std::vector<std::size_t> k_values;  // k_1 < ... < k_{s'}
  QMatrix lambda;                     // gamma' = lambda * gamma + mu * (1, ..., 1)
  std::vector<Rational> mu;
};

// Row operations bringing the differences gamma_{p,n-k+1} - gamma_{pk},
// k <= n/2, to reduced row echelon form, followed by a trace-free shift.
ReducedGamma reduce_gamma(const GammaMatrix& gamma);

LieAlgebra build_t0(std::size_t n);
LieAlgebra build_tgamma(std::size_t n, const GammaMatrix& gamma);
// gamma_p = E_pp - E_nn, p = 1..n-1.
LieAlgebra build_st(std::size_t n);
// st(n) plus the central identity element z.
LieAlgebra build_t(std::size_t n);

struct TheoremBasis {
  std::vector<PowerProduct> determinant_part;    // one per k outside {k_q}
  std::vector<RationalExpression> element_part;  // one per p > s'
  std::vector<PowerProduct> all() const;
};

// Closed-form determinant basis for t_gamma(n) in coordinates of build_tgamma(n, reduced.gamma).
TheoremBasis theorem_basis(std::size_t n, const ReducedGamma& reduced);

// Fixed algebras: abelian (param n), g3.1, g4.8 (param b), sl2, t0/t/st (param n).
std::vector<std::string> catalog_names();
LieAlgebra catalog_algebra(const std::string& name, const std::map<std::string, Rational>& params = {});
LieAlgebra build_abelian(std::size_t n);
LieAlgebra build_heisenberg();
LieAlgebra build_g48(const Rational& b);
LieAlgebra build_sl2();

}  // namespace lieinv
