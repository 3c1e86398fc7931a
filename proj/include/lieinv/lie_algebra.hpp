#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieinv/matrix.hpp"

namespace lieinv {

struct BracketTerm {
  std::uint32_t k;
  Rational c;
  bool operator==(const BracketTerm&) const = default;
};

// Finite-dimensional Lie algebra given by structure constants
// [e_i, e_j] = sum_k c_ij^k e_k. Indices are 1-based throughout, matching
// the coordinate variables x1..xn.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim, std::vector<std::string> basis = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Adds c*e_k to [e_i, e_j] (and -c*e_k to [e_j, e_i]). Throws IndexOutOfRange.
  void add_bracket(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Rational& c);

  Rational c(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  // Nonzero terms of [e_i, e_j] sorted by k; empty for commuting pairs.
  const std::vector<BracketTerm>& bracket(std::uint32_t i, std::uint32_t j) const;
  // Stored brackets with i < j.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> upper_brackets() const;
  std::size_t bracket_count() const;

  // Coordinate names for printing/parsing: "e<digits>" becomes "x<digits>",
  // any other basis name b becomes "x_b".
  VarNames coordinate_names() const;
  // Basis symbol names for enveloping-algebra output.
  std::string basis_name(std::uint32_t i) const { return basis_[i - 1]; }

  // Product order and signs used by default for B(theta). Empty means basis
  // order with every sign +1.
  const std::vector<std::uint32_t>& generator_order() const { return order_; }
  const std::vector<int>& generator_signs() const { return signs_; }
  void set_generator_order(std::vector<std::uint32_t> order);
  void set_generator_signs(std::vector<int> signs);

  // Same basis, every structure constant multiplied by s.
  LieAlgebra scaled(const Rational& s) const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && table_ == o.table_; }

 private:
  std::vector<BracketTerm>& slot(std::uint32_t i, std::uint32_t j) { return table_[(i - 1) * dim_ + (j - 1)]; }

  std::size_t dim_ = 0;
  std::vector<std::string> basis_;
  std::string name_;
  std::vector<std::vector<BracketTerm>> table_;  // dim x dim, antisymmetric
  std::vector<std::uint32_t> order_;
  std::vector<int> signs_;
};

struct JacobiFailure {
  std::array<std::uint32_t, 4> ijkl;  // i < j < k, component l
  Rational value;
};

struct ValidationReport {
  std::vector<JacobiFailure> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Jacobi identity for all i < j < k and every component l.
ValidationReport validate(const LieAlgebra& alg);
// Throws JacobiViolation carrying the report text when validate fails.
void require_valid(const LieAlgebra& alg);

// (ad_{e_i})_{kj} = c_ij^k.
QMatrix ad_matrix_q(const LieAlgebra& alg, std::uint32_t i);
ExpPolyMatrix ad_matrix(const LieAlgebra& alg, std::uint32_t i);

// Basis of the center as coefficient vectors of length dim.
std::vector<std::vector<Rational>> center(const LieAlgebra& alg);
// Generators whose ad matrix vanishes; these carry no group parameter.
bool is_central_generator(const LieAlgebra& alg, std::uint32_t i);

// M_ij = sum_k c_ij^k x_k.
ExpPolyMatrix coadjoint_matrix(const LieAlgebra& alg);

struct CoadjointProfile {
  std::size_t rank = 0;
  std::size_t n_invariants = 0;
  std::size_t center_dim = 0;
  std::vector<std::vector<Rational>> center_basis;
  std::size_t aut_param_count = 0;
};

CoadjointProfile coadjoint_profile(const LieAlgebra& alg);

// JSON schema: {"dim", "basis", "brackets": [{"i", "j", "terms": [{"k", "c"}]}]}
// with optional "name", "generator_order" and "generator_signs".
// Malformed input raises InputError naming the offending field.
LieAlgebra parse_algebra_json(std::string_view text);
LieAlgebra load_algebra(const std::string& path);
std::string algebra_to_json(const LieAlgebra& alg);

}  // namespace lieinv
