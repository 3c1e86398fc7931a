#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lieinv/lie_algebra.hpp"
#include "lieinv/power_product.hpp"

namespace lieinv {

// X_i F = sum_{j,k} c_ij^k x_k dF/dx_j for i = 1..dim; all zero iff F is an
// invariant. Throws NotParameterFree when F involves theta or unit variables.
std::vector<RationalExpression> infinitesimal_check(const RationalExpression& f, const LieAlgebra& alg);
// For products with fractional powers the residuals are X_i(log F) = (X_i F) / F.
std::vector<RationalExpression> infinitesimal_check(const PowerProduct& f, const LieAlgebra& alg);

bool all_zero(const std::vector<RationalExpression>& residuals);

// Generic rank of the Jacobian (dF_l / dx_i), i = 1..dim.
std::size_t independence_rank(const std::vector<RationalExpression>& fs, std::size_t dim);
std::size_t independence_rank(const std::vector<PowerProduct>& fs, std::size_t dim);

struct Certificate {
  std::vector<std::vector<RationalExpression>> residuals;  // [invariant][generator - 1]
  std::size_t jacobian_rank = 0;
  std::size_t expected_count = 0;
  std::size_t count = 0;
  bool passed = false;
};

// Infinitesimal check of every F, Jacobian rank, and comparison with N_g
// (computed from the coadjoint profile unless supplied).
Certificate certify_basis(const std::vector<PowerProduct>& fs, const LieAlgebra& alg,
                          std::optional<std::size_t> expected = std::nullopt);
Certificate certify_basis(const std::vector<RationalExpression>& fs, const LieAlgebra& alg,
                          std::optional<std::size_t> expected = std::nullopt);

}  // namespace lieinv
