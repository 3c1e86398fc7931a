#include "lieinv/normalization.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lieinv/errors.hpp"

namespace lieinv {

namespace {

bool has_parameters(const RationalExpression& e) {
  return e.depends_on_kind(VarKind::GroupParam) || e.depends_on_kind(VarKind::ExpUnit);
}

// Exponent a when every term of p carries exactly v^a, nullopt otherwise.
std::optional<int> uniform_degree(const Polynomial& p, Variable v) {
  const int lo = p.min_degree(v);
  if (lo != p.max_degree(v)) return std::nullopt;
  return lo;
}

// m with e = v^m * S, S free of v; nullopt when v does not factor out.
std::optional<int> unit_exponent(const RationalExpression& e, Variable v) {
  auto a = uniform_degree(e.numerator(), v);
  auto b = uniform_degree(e.denominator(), v);
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

Polynomial strip_units(const Polynomial& p) {
  Monomial units;
  const Monomial content = p.monomial_content();
  for (const auto& [var, e] : content.factors()) {
    if (var.kind == VarKind::ExpUnit) units = units * Monomial::of(var, e);
  }
  return p.mul_monomial(units.pow(-1)).primitive();
}

bool affine_in(const RationalExpression& e, Variable theta) {
  return e.depends_on(theta) && !e.denominator().depends_on(theta) && e.numerator().max_degree(theta) == 1;
}

// E_j^(m/g) * E0^(-e/g) for every other expression carrying v.
void combine_multiplicative(std::vector<RationalExpression>& work, std::size_t pivot, Variable v, int m) {
  const RationalExpression e0 = work[pivot];
  for (std::size_t j = 0; j < work.size(); ++j) {
    if (j == pivot || !work[j].depends_on(v)) continue;
    const int e = *unit_exponent(work[j], v);
    const int g = std::gcd(m, e);
    int a = m / g;
    int b = e / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
    work[j] = work[j].pow(a) * e0.pow(-b);
  }
}

void substitute_all(std::vector<RationalExpression>& work, Variable theta, const RationalExpression& value) {
  const std::map<Variable, RationalExpression> binding{{theta, value}};
  for (auto& e : work) {
    if (e.depends_on(theta)) e = substitute(e, binding);
  }
}

std::map<Variable, Rational> find_witness(const std::vector<Polynomial>& assumptions, std::uint64_t seed) {
  std::set<Variable> vars;
  for (const auto& a : assumptions) {
    auto v = a.variables();
    vars.insert(v.begin(), v.end());
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-99, 99);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::map<Variable, Rational> point;
    for (auto v : vars) {
      int value = 0;
      while (value == 0) value = dist(rng);
      point[v] = value;
    }
    bool ok = std::all_of(assumptions.begin(), assumptions.end(),
                          [&](const Polynomial& a) { return a.evaluate(point) != 0; });
    if (ok) return point;
  }
  return {};
}

}  // namespace

std::vector<StepChoice> step_candidates(const std::vector<RationalExpression>& current,
                                        const std::set<std::uint32_t>& unsolved) {
  std::vector<StepChoice> out;
  auto uses = [&](Variable v) {
    return std::any_of(current.begin(), current.end(), [v](const RationalExpression& e) { return e.depends_on(v); });
  };
  for (auto k : unsolved) {
    const Variable theta = Variable::theta(k);
    if (uses(Variable::unit(k))) continue;
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (affine_in(current[j], theta)) out.push_back(StepChoice{StepKind::Affine, j, theta, 0});
    }
  }
  // Parameter-free pivots first, then short equations: a pivot that still
  // carries parameters can vanish after a later substitution.
  auto cost = [&](const StepChoice& c) {
    const auto coeffs = current[c.equation].numerator().coefficients_in(c.variable);
    const bool free = !coeffs[1].depends_on_kind(VarKind::GroupParam) && !coeffs[1].depends_on_kind(VarKind::ExpUnit);
    return std::pair<int, std::size_t>(free ? 0 : 1, current[c.equation].numerator().terms().size());
  };
  std::stable_sort(out.begin(), out.end(), [&](const StepChoice& a, const StepChoice& b) { return cost(a) < cost(b); });
  for (auto k : unsolved) {
    const Variable v = Variable::unit(k);
    if (uses(Variable::theta(k)) || !uses(v)) continue;
    bool monomial_everywhere = true;
    for (const auto& e : current) {
      if (e.depends_on(v) && !unit_exponent(e, v)) monomial_everywhere = false;
    }
    if (!monomial_everywhere) continue;
    for (std::size_t j = 0; j < current.size(); ++j) {
      if (current[j].depends_on(v)) out.push_back(StepChoice{StepKind::Multiplicative, j, v, 1});
    }
  }
  return out;
}

std::optional<StepChoice> choose_step(const std::vector<RationalExpression>& current,
                                      const std::set<std::uint32_t>& unsolved) {
  auto all = step_candidates(current, unsolved);
  if (all.empty()) return std::nullopt;
  return all.front();
}

InvariantBasis normalize(const LiftedInvariantSet& lifted, const NormalizeOptions& options) {
  InvariantBasis out;
  out.algebra = lifted.algebra;
  const auto profile = coadjoint_profile(lifted.algebra);
  out.expected_count = profile.n_invariants;
  out.profile_rank = profile.rank;

  std::vector<RationalExpression> work = lifted.exprs;
  std::vector<std::size_t> origin(work.size());
  std::iota(origin.begin(), origin.end(), std::size_t{1});
  std::set<std::uint32_t> unsolved(lifted.params.begin(), lifted.params.end());

  std::vector<Polynomial> all_assumptions;
  // Assumptions rewritten through every later substitution; none may collapse to 0.
  std::vector<RationalExpression> live;
  for (std::size_t step = 0; step < options.max_steps && !unsolved.empty(); ++step) {
    bool applied = false;
    for (const auto& choice : step_candidates(work, unsolved)) {
      NormalizationStep rec;
      rec.kind = choice.kind;
      rec.equation_index = origin[choice.equation];
      rec.solved_variable = choice.variable;
      rec.constant = choice.constant;
      std::vector<RationalExpression> next = work;
      std::vector<RationalExpression> next_live = live;
      const RationalExpression eq = work[choice.equation];
      if (choice.kind == StepKind::Affine) {
        const auto coeffs = eq.numerator().coefficients_in(choice.variable);
        rec.solution = RationalExpression::fraction(-coeffs[0], coeffs[1]);
        rec.assumptions.push_back(strip_units(coeffs[1]));
      } else {
        rec.exponent = *unit_exponent(eq, choice.variable);
        const RationalExpression s = eq * RationalExpression::variable(choice.variable, -rec.exponent);
        rec.solution = s.inverse();
        rec.assumptions.push_back(strip_units(s.numerator()));
        combine_multiplicative(next, choice.equation, choice.variable, rec.exponent);
      }
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(choice.equation));
      try {
        if (choice.kind == StepKind::Affine) {
          substitute_all(next, choice.variable, rec.solution);
          substitute_all(next_live, choice.variable, rec.solution);
        }
      } catch (const SubstitutionPole&) {
        continue;
      }
      if (std::any_of(next_live.begin(), next_live.end(), [](const RationalExpression& a) { return a.is_zero(); }))
        continue;
      for (const auto& a : rec.assumptions) {
        if (a.is_constant()) continue;
        all_assumptions.push_back(a);
        next_live.emplace_back(a);
      }
      work = std::move(next);
      live = std::move(next_live);
      origin.erase(origin.begin() + static_cast<std::ptrdiff_t>(choice.equation));
      unsolved.erase(choice.variable.index);
      out.trace.steps.push_back(std::move(rec));
      applied = true;
      break;
    }
    if (!applied) break;
  }
  out.rho = out.trace.steps.size();

  // Exponent lattice over theta-free residuals of the form v^w * R.
  std::vector<std::size_t> lattice_rows;
  std::vector<std::uint32_t> units;
  for (std::size_t j = 0; j < work.size(); ++j) {
    const auto& e = work[j];
    if (e.depends_on_kind(VarKind::GroupParam) || !e.depends_on_kind(VarKind::ExpUnit)) continue;
    bool monomial = true;
    for (const auto& var : e.variables())
      if (var.kind == VarKind::ExpUnit && !unit_exponent(e, var)) monomial = false;
    if (!monomial) continue;
    lattice_rows.push_back(j);
    for (const auto& var : e.variables())
      if (var.kind == VarKind::ExpUnit && std::find(units.begin(), units.end(), var.index) == units.end())
        units.push_back(var.index);
  }
  std::sort(units.begin(), units.end());
  std::vector<RationalExpression> invariants;
  if (!lattice_rows.empty()) {
    // Columns of W^T are the lattice rows; its nullspace is the left nullspace of W.
    QMatrix wt(units.size(), lattice_rows.size());
    for (std::size_t c = 0; c < lattice_rows.size(); ++c)
      for (std::size_t u = 0; u < units.size(); ++u)
        wt(u, c) = *unit_exponent(work[lattice_rows[c]], Variable::unit(units[u]));
    out.rho += wt.rank();
    for (const auto& vec : wt.nullspace()) {
      Integer den = 1;
      for (const auto& q : vec) den = lcm(den, Integer(q.get_den()));
      std::vector<Integer> ints;
      Integer g = 0;
      for (const auto& q : vec) {
        ints.emplace_back(Integer(q * Rational(den)));
        g = gcd(g, ints.back());
      }
      std::vector<Integer> move(work.size(), 0);
      RationalExpression product = 1;
      for (std::size_t c = 0; c < ints.size(); ++c) {
        Integer m = ints[c] / g;
        move[lattice_rows[c]] = m;
        if (m != 0) product *= work[lattice_rows[c]].pow(static_cast<int>(m.get_si()));
      }
      out.trace.lattice_moves.push_back(std::move(move));
      invariants.push_back(product);
    }
  }
  for (std::size_t j = 0; j < work.size(); ++j) {
    const bool in_lattice = std::find(lattice_rows.begin(), lattice_rows.end(), j) != lattice_rows.end();
    if (has_parameters(work[j]) && !in_lattice) out.stalled = true;
    if (!has_parameters(work[j])) invariants.push_back(work[j]);
  }
  out.trace.residual_exprs = work;
  out.trace.residual_origin = origin;

  for (const auto& f : invariants) {
    if (!f.is_constant()) out.invariants.push_back(canonical_invariant(f));
  }
  sort_invariants(out.invariants);
  out.witness = find_witness(all_assumptions, options.seed);
  out.certificate = certify_basis(out.invariants, out.algebra, out.expected_count);
  out.certified = out.invariants.size() == out.expected_count && out.certificate.passed;
  return out;
}

std::vector<RationalExpression> replay(const LiftedInvariantSet& lifted, const NormalizationTrace& trace) {
  std::vector<RationalExpression> work = lifted.exprs;
  std::vector<std::size_t> origin(work.size());
  std::iota(origin.begin(), origin.end(), std::size_t{1});
  for (const auto& step : trace.steps) {
    auto it = std::find(origin.begin(), origin.end(), step.equation_index);
    if (it == origin.end()) throw std::logic_error("trace refers to a consumed equation");
    const auto pos = static_cast<std::size_t>(it - origin.begin());
    if (step.kind == StepKind::Affine) {
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(pos));
      origin.erase(it);
      substitute_all(work, step.solved_variable, step.solution);
    } else {
      combine_multiplicative(work, pos, step.solved_variable, step.exponent);
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(pos));
      origin.erase(it);
    }
  }
  return work;
}

RationalExpression canonical_invariant(const RationalExpression& f) {
  if (f.is_polynomial() && !f.is_zero()) return RationalExpression(f.numerator().primitive());
  if (!f.numerator().is_zero() && f.numerator().leading_coefficient() < 0) return -f;
  return f;
}

void sort_invariants(std::vector<RationalExpression>& fs) { std::stable_sort(fs.begin(), fs.end(), canonical_less); }

InvariantBasis polynomialize(const InvariantBasis& basis) {
  InvariantBasis out = basis;
  auto& fs = out.invariants;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& f : fs) {
      if (f.is_polynomial()) continue;
      Polynomial den = f.denominator();
      Polynomial multiplier = 1;
      for (const auto& p : fs) {
        if (!p.is_polynomial() || p.is_constant()) continue;
        const Polynomial prim = p.as_polynomial().primitive();
        while (!den.is_constant()) {
          auto q = divide_exact(den, prim);
          if (!q) break;
          den = *q;
          multiplier *= prim;
        }
      }
      if (den.is_constant()) {
        f = canonical_invariant(f * RationalExpression(multiplier));
        changed = true;
      }
    }
  }
  sort_invariants(fs);
  out.certificate = certify_basis(fs, out.algebra, out.expected_count);
  out.certified = basis.certified && out.certificate.passed;
  return out;
}

}  // namespace lieinv
