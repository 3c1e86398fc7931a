#include "lieinv/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

const std::vector<BracketTerm> kEmpty;

void add_term(std::vector<BracketTerm>& terms, std::uint32_t k, const Rational& c) {
  auto it = std::lower_bound(terms.begin(), terms.end(), k,
                             [](const BracketTerm& t, std::uint32_t key) { return t.k < key; });
  if (it != terms.end() && it->k == k) {
    it->c += c;
    if (it->c == 0) terms.erase(it);
  } else if (c != 0) {
    terms.insert(it, BracketTerm{k, c});
  }
}

void axpy(std::vector<Rational>& acc, const Rational& s, const std::vector<BracketTerm>& terms) {
  for (const auto& t : terms) acc[t.k - 1] += s * t.c;
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis)
    : dim_(dim), basis_(std::move(basis)), table_(dim * dim) {
  if (basis_.empty()) {
    for (std::size_t i = 1; i <= dim; ++i) basis_.push_back("e" + std::to_string(i));
  }
  if (basis_.size() != dim) throw InputError("basis has " + std::to_string(basis_.size()) + " names, dim is " +
                                             std::to_string(dim));
}

void LieAlgebra::add_bracket(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Rational& c) {
  for (auto idx : {i, j, k}) {
    if (idx < 1 || idx > dim_) throw IndexOutOfRange("basis index " + std::to_string(idx) + " outside 1.." +
                                                     std::to_string(dim_));
  }
  if (i == j) {
    if (c != 0) throw InputError("bracket [e" + std::to_string(i) + ", e" + std::to_string(i) + "] must vanish");
    return;
  }
  add_term(slot(i, j), k, c);
  add_term(slot(j, i), k, -c);
}

Rational LieAlgebra::c(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  for (const auto& t : bracket(i, j)) {
    if (t.k == k) return t.c;
  }
  return 0;
}

const std::vector<BracketTerm>& LieAlgebra::bracket(std::uint32_t i, std::uint32_t j) const {
  if (i < 1 || j < 1 || i > dim_ || j > dim_) return kEmpty;
  return table_[(i - 1) * dim_ + (j - 1)];
}

std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> LieAlgebra::upper_brackets() const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<BracketTerm>> out;
  for (std::uint32_t i = 1; i <= dim_; ++i) {
    for (std::uint32_t j = i + 1; j <= dim_; ++j) {
      const auto& b = bracket(i, j);
      if (!b.empty()) out[{i, j}] = b;
    }
  }
  return out;
}

std::size_t LieAlgebra::bracket_count() const { return upper_brackets().size(); }

VarNames LieAlgebra::coordinate_names() const {
  std::vector<std::string> names;
  bool standard = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::string& b = basis_[i];
    const bool digits = b.size() > 1 && b[0] == 'e' &&
                        std::all_of(b.begin() + 1, b.end(), [](unsigned char ch) { return std::isdigit(ch); });
    names.push_back(digits ? "x" + b.substr(1) : "x_" + b);
    if (names.back() != "x" + std::to_string(i + 1)) standard = false;
  }
  if (standard) return VarNames();
  return VarNames(std::move(names));
}

void LieAlgebra::set_generator_order(std::vector<std::uint32_t> order) {
  if (!order.empty()) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == dim_;
    for (std::size_t i = 0; perm && i < dim_; ++i) perm = sorted[i] == i + 1;
    if (!perm) throw InputError("generator_order is not a permutation of 1..dim");
  }
  order_ = std::move(order);
}

void LieAlgebra::set_generator_signs(std::vector<int> signs) {
  if (!signs.empty() && signs.size() != dim_) throw InputError("generator_signs needs one entry per basis element");
  for (int s : signs) {
    if (s != 1 && s != -1) throw InputError("generator_signs entries must be +1 or -1");
  }
  signs_ = std::move(signs);
}

LieAlgebra LieAlgebra::scaled(const Rational& s) const {
  LieAlgebra out = *this;
  for (auto& terms : out.table_) {
    for (auto& t : terms) t.c *= s;
    if (s == 0) terms.clear();
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << "jacobi (" << v.ijkl[0] << "," << v.ijkl[1] << "," << v.ijkl[2] << ") component " << v.ijkl[3]
       << ": " << lieinv::to_string(v.value) << "\n";
  }
  return os.str();
}

ValidationReport validate(const LieAlgebra& alg) {
  ValidationReport report;
  const auto n = static_cast<std::uint32_t>(alg.dim());
  // [[a,b],c] expanded through the table.
  auto outer = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::vector<Rational>& acc) {
    for (const auto& t : alg.bracket(a, b)) axpy(acc, t.c, alg.bracket(t.k, c));
  };
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = i + 1; j <= n; ++j) {
      for (std::uint32_t k = j + 1; k <= n; ++k) {
        std::vector<Rational> acc(n);
        outer(i, j, k, acc);
        outer(j, k, i, acc);
        outer(k, i, j, acc);
        for (std::uint32_t l = 1; l <= n; ++l) {
          if (acc[l - 1] != 0) report.violations.push_back({{i, j, k, l}, acc[l - 1]});
        }
      }
    }
  }
  return report;
}

void require_valid(const LieAlgebra& alg) {
  auto report = validate(alg);
  if (!report.ok()) throw JacobiViolation(report.to_string());
}

QMatrix ad_matrix_q(const LieAlgebra& alg, std::uint32_t i) {
  if (i < 1 || i > alg.dim()) throw IndexOutOfRange("generator index " + std::to_string(i));
  QMatrix m(alg.dim(), alg.dim());
  for (std::uint32_t j = 1; j <= alg.dim(); ++j) {
    for (const auto& t : alg.bracket(i, j)) m(t.k - 1, j - 1) = t.c;
  }
  return m;
}

ExpPolyMatrix ad_matrix(const LieAlgebra& alg, std::uint32_t i) { return ExpPolyMatrix(ad_matrix_q(alg, i)); }

std::vector<std::vector<Rational>> center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Row (j, k) of the stacked system: sum_i u_i c_ij^k = 0.
  QMatrix sys(n * n, n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      for (const auto& t : alg.bracket(i, j)) sys((j - 1) * n + (t.k - 1), i - 1) = t.c;
    }
  }
  return sys.nullspace();
}

bool is_central_generator(const LieAlgebra& alg, std::uint32_t i) {
  for (std::uint32_t j = 1; j <= alg.dim(); ++j) {
    if (!alg.bracket(i, j).empty()) return false;
  }
  return true;
}

ExpPolyMatrix coadjoint_matrix(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  ExpPolyMatrix m(n, n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    for (std::uint32_t j = 1; j <= n; ++j) {
      std::vector<Term> terms;
      for (const auto& t : alg.bracket(i, j)) terms.push_back({Monomial::of(Variable::x(t.k)), t.c});
      m(i - 1, j - 1) = RationalExpression(Polynomial::from_terms(std::move(terms)));
    }
  }
  return m;
}

CoadjointProfile coadjoint_profile(const LieAlgebra& alg) {
  CoadjointProfile p;
  p.rank = generic_rank(coadjoint_matrix(alg));
  p.n_invariants = alg.dim() - p.rank;
  p.center_basis = center(alg);
  p.center_dim = p.center_basis.size();
  p.aut_param_count = alg.dim() - p.center_dim;
  return p;
}

}  // namespace lieinv
