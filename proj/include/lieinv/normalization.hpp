#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lieinv/exp_adjoint.hpp"
#include "lieinv/verifier.hpp"

namespace lieinv {

enum class StepKind : std::uint8_t {
  Affine,          // I_j = 0 solved for theta_k, which enters linearly
  Multiplicative,  // I_j = v_k^m * S set to 1; other v_k-monomial expressions recombined
};

struct StepChoice {
  StepKind kind = StepKind::Affine;
  std::size_t equation = 0;  // position in the current working list
  Variable variable;         // theta_k (affine) or v_k (multiplicative)
  Rational constant;         // 0 or 1
};

// Every usable (equation, parameter) pair in preference order: affine
// candidates by (parameter index, position), then multiplicative ones.
std::vector<StepChoice> step_candidates(const std::vector<RationalExpression>& current,
                                        const std::set<std::uint32_t>& unsolved);
// First candidate; nullopt means the system has stalled. normalize() skips
// candidates whose substitution would violate an earlier genericity assumption.
std::optional<StepChoice> choose_step(const std::vector<RationalExpression>& current,
                                      const std::set<std::uint32_t>& unsolved);

struct NormalizationStep {
  StepKind kind = StepKind::Affine;
  std::size_t equation_index = 0;  // 1-based index of the lifted invariant used
  Variable solved_variable;
  Rational constant;
  // Affine: theta_k = solution. Multiplicative: v_k^exponent = solution.
  RationalExpression solution;
  int exponent = 1;
  std::vector<Polynomial> assumptions;  // asserted nonzero
};

struct NormalizationTrace {
  std::vector<NormalizationStep> steps;
  std::vector<RationalExpression> residual_exprs;  // working list after the last step
  std::vector<std::size_t> residual_origin;        // lifted index of each residual
  std::vector<std::vector<Integer>> lattice_moves;  // exponent vectors over residual_exprs
};

struct InvariantBasis {
  LieAlgebra algebra;
  std::vector<RationalExpression> invariants;
  NormalizationTrace trace;
  std::size_t rho = 0;               // solved parameters + unit eliminations
  std::size_t expected_count = 0;    // N_g from the coadjoint profile
  std::size_t profile_rank = 0;
  bool stalled = false;              // some parameter could not be eliminated
  bool certified = false;
  Certificate certificate;
  std::map<Variable, Rational> witness;  // point where every assumption is nonzero
};

struct NormalizeOptions {
  std::size_t max_steps = 1000;
  std::uint64_t seed = 0;
};

InvariantBasis normalize(const LiftedInvariantSet& lifted, const NormalizeOptions& options = {});

// Re-applies the recorded steps to the lifted invariants; returns the
// working list, which must equal trace.residual_exprs.
std::vector<RationalExpression> replay(const LiftedInvariantSet& lifted, const NormalizationTrace& trace);

// Clears denominators that are products of polynomial invariants already in
// the basis, re-running the certificate afterwards.
InvariantBasis polynomialize(const InvariantBasis& basis);

// Sign and content normalisation used for output, then stable sorting.
RationalExpression canonical_invariant(const RationalExpression& f);
void sort_invariants(std::vector<RationalExpression>& fs);

}  // namespace lieinv
