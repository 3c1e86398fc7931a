#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "lieinv/rational_expression.hpp"

namespace lieinv {

// Dense matrix over Q. Used for structure-constant linear algebra (center,
// nilpotency, parameter reduction, exponent lattices) and numeric oracles.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;
  QMatrix operator+(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const = default;
  bool is_zero() const;
  QMatrix transpose() const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  // Basis of {u : A u = 0}; free columns get a 1 in their own slot.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Matrix of rational expressions: ad matrices, exp(theta ad), B(theta),
// Jacobians and coadjoint matrices.
class ExpPolyMatrix {
 public:
  ExpPolyMatrix() = default;
  ExpPolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit ExpPolyMatrix(const QMatrix& q);
  static ExpPolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_; }
  RationalExpression& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RationalExpression& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExpPolyMatrix operator*(const ExpPolyMatrix& o) const;
  ExpPolyMatrix operator+(const ExpPolyMatrix& o) const;
  ExpPolyMatrix operator-(const ExpPolyMatrix& o) const;
  bool operator==(const ExpPolyMatrix& o) const = default;

  bool is_constant() const;
  QMatrix to_rational() const;  // requires is_constant()
  bool is_identity() const;

  ExpPolyMatrix map(const std::function<RationalExpression(const RationalExpression&)>& f) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RationalExpression> data_;
};

ExpPolyMatrix substitute(const ExpPolyMatrix& m, const std::map<Variable, RationalExpression>& bindings);
ExpPolyMatrix differentiate(const ExpPolyMatrix& m, Variable v, const ExpScales& scales = {});

// Determinant by Laplace expansion along the first row.
RationalExpression det_cofactor(const ExpPolyMatrix& m);
// Determinant by Bareiss fraction-free elimination over the polynomial ring.
RationalExpression det_bareiss(const ExpPolyMatrix& m);
// Cofactor expansion up to 4x4, Bareiss beyond.
RationalExpression det_fraction_free(const ExpPolyMatrix& m);

// Rank over the field of rational functions, by fraction-free elimination
// with full pivoting on the sparsest available pivot.
std::size_t generic_rank(const ExpPolyMatrix& m);

}  // namespace lieinv
