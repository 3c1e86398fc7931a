#include "lieinv/enveloping.hpp"

#include <algorithm>

#include "lieinv/errors.hpp"

namespace lieinv {

NcPolynomial NcPolynomial::word(NcWord w, const Rational& c) {
  NcPolynomial p;
  p.add(w, c);
  return p;
}

Rational NcPolynomial::scalar_part() const {
  auto it = terms_.find(NcWord{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPolynomial::add(const NcWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  NcPolynomial r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const { return *this + o * Rational(-1); }

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
  NcPolynomial r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      NcWord w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add(w, ca * cb);
    }
  }
  return r;
}

NcPolynomial NcPolynomial::operator*(const Rational& c) const {
  NcPolynomial r;
  for (const auto& [w, x] : terms_) r.add(w, x * c);
  return r;
}

std::string NcPolynomial::to_string(const std::vector<std::string>& basis) const {
  if (terms_.empty()) return "0";
  auto letter = [&](std::uint32_t i) { return i <= basis.size() ? basis[i - 1] : "e" + std::to_string(i); };
  std::string out;
  // Longest words first, lexicographic within a length.
  std::vector<std::pair<NcWord, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  for (const auto& [w, c] : ordered) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    for (std::size_t k = 0; k < w.size(); ++k) body += (k ? "*" : "") + letter(w[k]);
    if (w.empty()) {
      out += lieinv::to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += lieinv::to_string(mag) + "*" + body;
    }
  }
  return out;
}

NcPolynomial symmetrize(const Polynomial& f) {
  NcPolynomial out;
  for (const auto& term : f.terms()) {
    NcWord letters;
    for (const auto& [v, e] : term.monomial.factors()) {
      if (v.kind != VarKind::Coordinate || e < 0) throw NotPolynomial("symmetrization needs a polynomial in coordinates");
      letters.insert(letters.end(), static_cast<std::size_t>(e), v.index);
    }
    std::sort(letters.begin(), letters.end());
    std::vector<NcWord> perms;
    do {
      perms.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    const Rational share = term.coefficient / Rational(static_cast<unsigned long>(perms.size()));
    for (const auto& w : perms) out.add(w, share);
  }
  return out;
}

NcPolynomial symmetrize(const RationalExpression& f) {
  if (!f.is_polynomial()) throw NotPolynomial("rational invariants are not symmetrized");
  return symmetrize(f.as_polynomial());
}

NcPolynomial pbw_reduce(const NcPolynomial& p, const LieAlgebra& alg) {
  NcPolynomial done;
  NcPolynomial pending = p;
  while (!pending.is_zero()) {
    NcPolynomial next;
    for (const auto& [w, c] : pending.terms()) {
      std::size_t pos = 0;
      while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
      if (pos + 1 >= w.size()) {
        done.add(w, c);
        continue;
      }
      NcWord swapped = w;
      std::swap(swapped[pos], swapped[pos + 1]);
      next.add(swapped, c);
      for (const auto& t : alg.bracket(w[pos], w[pos + 1])) {
        NcWord shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        shorter.push_back(t.k);
        shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
        next.add(shorter, c * t.c);
      }
    }
    pending = std::move(next);
  }
  return done;
}

std::vector<NcPolynomial> commutes_with_generators(const NcPolynomial& p, const LieAlgebra& alg) {
  std::vector<NcPolynomial> out;
  for (std::uint32_t i = 1; i <= alg.dim(); ++i) {
    const NcPolynomial e = NcPolynomial::generator(i);
    out.push_back(pbw_reduce(p * e - e * p, alg));
  }
  return out;
}

}  // namespace lieinv
