#pragma once

#include <complex>
#include <cstdint>

#include "ratios/arith.hpp"
#include "ratios/character.hpp"

namespace ratios {

/// χ_n = (·/n) for odd positive n.
struct QuadChar {
  std::uint64_t n = 1;
  std::uint64_t n0 = 1;
  std::uint64_t n1 = 1;
  bool even = true;       // n ≡ 1 mod 4
  bool primitive = true;  // n squarefree

  static QuadChar make(std::uint64_t n, const FactorSieve& sieve);
};

/// Σ_{j mod n} χ(j) e(jq/n) by direct summation.
Complex tau_bruteforce(const DirichletChar& chi, std::int64_t q);

/// G((·/p^k), q) by the exact case split on ord_p(q).
Complex G_prime_power(std::uint64_t p, std::uint32_t k, std::int64_t q);

/// G(χ_n, q), multiplicative in n.
Complex G_quadratic(std::uint64_t n, std::int64_t q, const FactorSieve& sieve);

/// τ(χ_n, q) recovered from G.
Complex tau_quadratic(std::uint64_t n, std::int64_t q, const FactorSieve& sieve);

/// τ((4l/·), q) for odd l.
Complex tau_4l(std::uint64_t l, std::int64_t q, const FactorSieve& sieve);

struct RootNumber {
  Complex a;        // 1 for even, -i for odd
  Complex epsilon;  // a τ(χ,1)/√n
};

/// Throws Errc::not_primitive for non-squarefree n.
RootNumber epsilon_factor(const QuadChar& chi, const FactorSieve& sieve);

/// τ(ψ_j, q) for the characters modulo 8 (ψ_0 taken modulo 1).
Complex psi8_tau(int j, std::int64_t q);

}  // namespace ratios
