#pragma once

#include "lieinv/families.hpp"

namespace lieinv::testing {

// Every condition of the reduced form, checked entry by entry.
inline bool reduced_conditions_hold(const ReducedGamma& r) {
  const auto& g = r.gamma;
  const std::size_t n = g.n();
  const std::size_t half = n / 2;
  auto kappa = [n](std::size_t k) { return n - k + 1; };
  for (std::size_t p = 1; p <= g.s(); ++p) {
    Rational trace;
    for (std::size_t i = 1; i <= n; ++i) trace += g(p, i);
    if (trace != 0) return false;
  }
  for (std::size_t q = 1; q <= r.s_prime; ++q) {
    const std::size_t kq = r.k_values[q - 1];
    if (kq < 1 || kq > half) return false;
    if (q > 1 && r.k_values[q - 2] >= kq) return false;
    for (std::size_t k = 1; k < kq; ++k)
      if (g(q, k) != g(q, kappa(k))) return false;
    if (g(q, kappa(kq)) - g(q, kq) != 1) return false;
    for (std::size_t p = 1; p <= g.s(); ++p)
      if (p != q && g(p, kq) != g(p, kappa(kq))) return false;
  }
  for (std::size_t p = r.s_prime + 1; p <= g.s(); ++p)
    for (std::size_t k = 1; k <= half; ++k)
      if (g(p, k) != g(p, kappa(k))) return false;
  return true;
}

// gamma' = lambda * gamma + mu * (1, ..., 1) with lambda invertible.
inline bool transform_matches(const GammaMatrix& original, const ReducedGamma& r) {
  if (r.lambda.rank() != original.s()) return false;
  for (std::size_t p = 1; p <= original.s(); ++p) {
    for (std::size_t i = 1; i <= original.n(); ++i) {
      Rational v = r.mu[p - 1];
      for (std::size_t q = 1; q <= original.s(); ++q) v += r.lambda(p - 1, q - 1) * original(q, i);
      if (v != r.gamma(p, i)) return false;
    }
  }
  return true;
}

}  // namespace lieinv::testing
