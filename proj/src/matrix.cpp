#include "lieinv/matrix.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>

namespace lieinv {

// ----------------------------------------------------------------- QMatrix

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
      }
    }
  }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<std::size_t> QMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && (*this)(p, col) == 0) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
    }
    const Rational inv = 1 / (*this)(row, col);
    for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || (*this)(i, col) == 0) continue;
      const Rational f = (*this)(i, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t QMatrix::rank() const {
  QMatrix c = *this;
  return c.rref().size();
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
  QMatrix r = *this;
  const auto pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ----------------------------------------------------------- ExpPolyMatrix

ExpPolyMatrix::ExpPolyMatrix(const QMatrix& q) : rows_(q.rows()), cols_(q.cols()), data_(q.rows() * q.cols()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (q(i, j) != 0) (*this)(i, j) = RationalExpression(q(i, j));
    }
  }
}

ExpPolyMatrix ExpPolyMatrix::identity(std::size_t n) {
  ExpPolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExpPolyMatrix ExpPolyMatrix::operator*(const ExpPolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExpPolyMatrix: shape mismatch");
  ExpPolyMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const RationalExpression& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const RationalExpression& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

ExpPolyMatrix ExpPolyMatrix::operator+(const ExpPolyMatrix& o) const {
  ExpPolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

ExpPolyMatrix ExpPolyMatrix::operator-(const ExpPolyMatrix& o) const {
  ExpPolyMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

bool ExpPolyMatrix::is_constant() const {
  return std::all_of(data_.begin(), data_.end(), [](const RationalExpression& e) { return e.is_constant(); });
}

QMatrix ExpPolyMatrix::to_rational() const {
  QMatrix q(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) q(i, j) = (*this)(i, j).constant_value();
  }
  return q;
}

bool ExpPolyMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

ExpPolyMatrix ExpPolyMatrix::map(const std::function<RationalExpression(const RationalExpression&)>& f) const {
  ExpPolyMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f(data_[i]);
  return r;
}

ExpPolyMatrix substitute(const ExpPolyMatrix& m, const std::map<Variable, RationalExpression>& bindings) {
  return m.map([&](const RationalExpression& e) { return substitute(e, bindings); });
}

ExpPolyMatrix differentiate(const ExpPolyMatrix& m, Variable v, const ExpScales& scales) {
  return m.map([&](const RationalExpression& e) { return differentiate(e, v, scales); });
}

// ------------------------------------------------------------ determinants

namespace {

RationalExpression cofactor_rec(const ExpPolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return 1;
  RationalExpression sum;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const std::size_t c = cols[k];
    if (!m(row, c).is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      RationalExpression minor = cofactor_rec(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
      RationalExpression term = m(row, c) * minor;
      sum = sign > 0 ? sum + term : sum - term;
    }
    sign = -sign;
  }
  return sum;
}

// Rows scaled to polynomial entries; returns the product of the row scales.
std::vector<std::vector<Polynomial>> clear_row_denominators(const ExpPolyMatrix& m, RationalExpression* scale) {
  std::vector<std::vector<Polynomial>> rows(m.rows(), std::vector<Polynomial>(m.cols()));
  RationalExpression total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Polynomial l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Polynomial& d = m(i, j).denominator();
      if (d.is_constant() && d.constant_value() == 1) continue;
      const Polynomial g = gcd(l, d);
      l = *divide_exact(l * d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RationalExpression& e = m(i, j);
      rows[i][j] = e.numerator() * *divide_exact(l, e.denominator());
    }
    total *= RationalExpression(l);
  }
  if (scale) *scale = total;
  return rows;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Sparsest nonzero entry in the trailing block, ties broken by position.
std::optional<Pivot> choose_pivot(const std::vector<std::vector<Polynomial>>& a, const std::vector<std::size_t>& rows,
                                  const std::vector<std::size_t>& cols, std::size_t k) {
  std::optional<Pivot> best;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = k; i < rows.size(); ++i) {
    for (std::size_t j = k; j < cols.size(); ++j) {
      const Polynomial& p = a[rows[i]][cols[j]];
      if (p.is_zero()) continue;
      const std::size_t size = p.size() * 64 + static_cast<std::size_t>(p.total_degree());
      if (size < best_size) {
        best_size = size;
        best = Pivot{i, j};
        if (p.is_constant()) return best;
      }
    }
  }
  return best;
}

// Bareiss elimination with full pivoting. Returns the rank and, when the
// matrix is square and nonsingular, the signed determinant of the polynomial matrix.
std::size_t bareiss(std::vector<std::vector<Polynomial>> a, std::size_t n_rows, std::size_t n_cols,
                    Polynomial* det) {
  std::vector<std::size_t> rows(n_rows);
  std::vector<std::size_t> cols(n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) rows[i] = i;
  for (std::size_t j = 0; j < n_cols; ++j) cols[j] = j;
  int sign = 1;
  Polynomial prev = 1;
  std::size_t rank = 0;
  const std::size_t limit = std::min(n_rows, n_cols);
  for (std::size_t k = 0; k < limit; ++k) {
    auto pivot = choose_pivot(a, rows, cols, k);
    if (!pivot) break;
    if (pivot->row != k) {
      std::swap(rows[k], rows[pivot->row]);
      sign = -sign;
    }
    if (pivot->col != k) {
      std::swap(cols[k], cols[pivot->col]);
      sign = -sign;
    }
    const Polynomial p = a[rows[k]][cols[k]];
    for (std::size_t i = k + 1; i < n_rows; ++i) {
      auto& ri = a[rows[i]];
      const Polynomial lead = ri[cols[k]];
      for (std::size_t j = k + 1; j < n_cols; ++j) {
        Polynomial& x = ri[cols[j]];
        const Polynomial& y = a[rows[k]][cols[j]];
        if (lead.is_zero() && prev.is_constant() && prev.constant_value() == 1) {
          x = x * p;
          continue;
        }
        Polynomial v = x * p;
        if (!lead.is_zero() && !y.is_zero()) v -= lead * y;
        if (!(prev.is_constant() && prev.constant_value() == 1)) {
          auto q = divide_exact(v, prev);
          if (!q) throw std::logic_error("bareiss: inexact division");
          v = std::move(*q);
        }
        x = std::move(v);
      }
      ri[cols[k]] = Polynomial();
    }
    prev = p;
    ++rank;
  }
  if (det) {
    if (n_rows != n_cols || rank < n_rows) {
      *det = Polynomial();
    } else {
      *det = sign > 0 ? prev : -prev;
    }
  }
  return rank;
}

// Rank by cross-multiplied elimination: row_i <- p*row_i - lead*row_k on the
// rows that have a nonzero in the pivot column, then the row's monomial
// content is divided out. Pivots are short entries in sparse lines.
std::size_t sparse_rank(std::vector<std::vector<Polynomial>> a, std::size_t n_rows, std::size_t n_cols) {
  std::vector<bool> row_done(n_rows), col_done(n_cols);
  std::size_t rank = 0;
  while (true) {
    std::vector<std::size_t> row_nz(n_rows), col_nz(n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < n_cols; ++j) {
        if (!col_done[j] && !a[i][j].is_zero()) {
          ++row_nz[i];
          ++col_nz[j];
        }
      }
    }
    std::optional<Pivot> pivot;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (row_done[i]) continue;
      for (std::size_t j = 0; j < n_cols; ++j) {
        if (col_done[j] || a[i][j].is_zero()) continue;
        const std::size_t cost = a[i][j].size() * 1000 + (row_nz[i] - 1) * (col_nz[j] - 1);
        if (cost < best) {
          best = cost;
          pivot = Pivot{i, j};
        }
      }
    }
    if (!pivot) break;
    const std::size_t pr = pivot->row, pc = pivot->col;
    row_done[pr] = true;
    col_done[pc] = true;
    ++rank;
    const Polynomial p = a[pr][pc];
    for (std::size_t i = 0; i < n_rows; ++i) {
      if (row_done[i] || a[i][pc].is_zero()) continue;
      const Polynomial lead = a[i][pc];
      std::optional<Monomial> content;
      for (std::size_t j = 0; j < n_cols; ++j) {
        if (col_done[j]) {
          a[i][j] = Polynomial();
          continue;
        }
        Polynomial v = a[i][j] * p;
        if (!a[pr][j].is_zero()) v -= lead * a[pr][j];
        a[i][j] = std::move(v);
        if (a[i][j].is_zero()) continue;
        content = content ? Monomial::min(*content, a[i][j].monomial_content()) : a[i][j].monomial_content();
      }
      if (content && !content->is_one()) {
        const Monomial inverse = Monomial() / *content;
        for (auto& x : a[i])
          if (!x.is_zero()) x = x.mul_monomial(inverse);
      }
    }
  }
  return rank;
}

}  // namespace

RationalExpression det_cofactor(const ExpPolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return cofactor_rec(m, cols, 0);
}

RationalExpression det_bareiss(const ExpPolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  RationalExpression scale;
  auto rows = clear_row_denominators(m, &scale);
  Polynomial det;
  bareiss(std::move(rows), m.rows(), m.cols(), &det);
  return RationalExpression(det) / scale;
}

RationalExpression det_fraction_free(const ExpPolyMatrix& m) {
  if (m.rows() <= 4) return det_cofactor(m);
  return det_bareiss(m);
}

std::size_t generic_rank(const ExpPolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (m.is_constant()) return m.to_rational().rank();
  auto rows = clear_row_denominators(m, nullptr);
  return sparse_rank(std::move(rows), m.rows(), m.cols());
}

}  // namespace lieinv
