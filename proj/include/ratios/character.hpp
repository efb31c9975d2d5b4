#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ratios/arith.hpp"

namespace ratios {

/// A real Dirichlet character given by its value table on Z/modulus.
struct DirichletChar {
  std::uint64_t modulus = 1;
  std::vector<std::int8_t> values;  // values[r], 0 <= r < modulus

  int operator()(std::int64_t m) const {
    auto q = static_cast<std::int64_t>(modulus);
    std::int64_t r = m % q;
    if (r < 0) r += q;
    return values[static_cast<std::size_t>(r)];
  }
  bool is_even() const { return modulus == 1 || values[modulus - 1] == 1; }
};

/// (·/n) for odd positive n, modulo n.
DirichletChar jacobi_char(std::uint64_t n);
/// (D/·) for D ≡ 0, 1 mod 4, modulo |D| (modulo 1 for D = 1).
DirichletChar kronecker_char(std::int64_t d);
/// ψ_j(m) = (4j/m) for j ∈ {±1, ±2}, ψ_0 ≡ 1; tabulated modulo 8.
DirichletChar psi8_char(int j);
/// Pointwise product, modulo lcm of the moduli.
DirichletChar char_product(const DirichletChar& a, const DirichletChar& b);

int psi8(int j, std::int64_t m);

/// Quadratic residue symbols for all odd primes up to a bound, for fast
/// bulk evaluation of (D/m), m <= bound, by complete multiplicativity.
class LegendreTable {
 public:
  explicit LegendreTable(std::uint32_t bound);

  std::uint32_t bound() const noexcept { return bound_; }

  /// (D/p) for prime p <= bound (p = 2 included).
  int symbol(std::int64_t d, std::uint32_t p) const;

  /// out[m] = (D/m) for 0 <= m < out.size(); out.size() - 1 <= bound.
  void fill_kronecker(std::int64_t d, std::span<std::int8_t> out) const;

 private:
  std::uint32_t bound_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> offset_;  // per prime index into symbols_
  std::vector<std::int8_t> symbols_;
};

/// The real primitive character attached to the odd squarefree kernel n0:
/// (·/n0) = (n0*/·) with n0* = ±n0 ≡ 1 mod 4.
inline std::int64_t signed_discriminant_of_odd(std::uint64_t n0) {
  auto v = static_cast<std::int64_t>(n0);
  return (n0 % 4 == 1) ? v : -v;
}

}  // namespace ratios
