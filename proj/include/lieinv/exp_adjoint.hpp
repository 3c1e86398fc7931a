#pragma once

#include <cstdint>
#include <vector>

#include "lieinv/lie_algebra.hpp"

namespace lieinv {

// exp(theta*A) = sum_m theta^m A^m / m! for constant nilpotent A.
// Throws NotNilpotent when A^n != 0.
ExpPolyMatrix exp_nilpotent(const ExpPolyMatrix& a, Variable theta);

struct OneParameterExp {
  ExpPolyMatrix matrix;
  int q = 1;  // unit v_k stands for exp(theta_k / q)
};

// exp(theta_k*A) for a constant matrix that is triangular after a symmetric
// permutation, with rational diagonal. Entries are quasi-polynomials
// sum_l p_l(theta_k) * v_k^(l*q). Throws UnsupportedSpectrum naming the
// cycle when the off-diagonal support is cyclic.
OneParameterExp exp_triangular(const ExpPolyMatrix& a, Variable theta);

// Nilpotent series when A is nilpotent, triangular solve otherwise.
OneParameterExp exp_one_parameter(const ExpPolyMatrix& a, Variable theta);

struct LiftedInvariantSet {
  LieAlgebra algebra;
  ExpPolyMatrix B;
  std::vector<RationalExpression> exprs;       // I_j = sum_i x_i B_ij
  std::vector<std::uint32_t> params;           // parameter indices, product order
  ExpScales exp_denominators;                  // q_k for parameters with a unit
  std::vector<std::uint32_t> generator_order;  // full permutation used
  std::vector<int> signs;                      // per basis element
  std::size_t param_count() const { return params.size(); }
};

// B(theta) = prod over non-central generators i (in order) of
// exp(sign_i * theta_i * ad_{e_i}); parameter k belongs to generator k.
// Empty order/signs fall back to the algebra's defaults, then to basis
// order with every sign +1.
LiftedInvariantSet inner_automorphism_matrix(const LieAlgebra& alg, std::vector<std::uint32_t> order = {},
                                             std::vector<int> signs = {});

}  // namespace lieinv
