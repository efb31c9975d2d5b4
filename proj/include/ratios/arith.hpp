#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ratios {

using Complex = std::complex<double>;

/// Kronecker symbol (a/n) for all integers, with the usual conventions
/// (a/0) = [a = ±1] and (a/-1) = sign(a). Precondition: not both zero.
int kronecker(std::int64_t a, std::int64_t n) noexcept;

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(std::int64_t a, std::uint64_t n) noexcept;

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};

struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> pairs;  // primes strictly increasing
};

/// n = n0 * n1^2 with n0 squarefree.
struct SquarefreeKernel {
  std::uint64_t n0;
  std::uint64_t n1;
};

/// Smallest-prime-factor table on [0, limit]. Immutable after construction,
/// so one instance can be shared by any number of threads.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint32_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  std::uint32_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;
  Factorization factor(std::uint64_t n) const;
  int mobius(std::uint64_t n) const;
  bool is_squarefree(std::uint64_t n) const;
  int omega(std::uint64_t n) const;

  SquarefreeKernel squarefree_kernel(std::uint64_t n) const;

  /// prod_{p | l} (1 - p^{-t})
  Complex a_t(std::uint64_t l, Complex t) const;

  /// Throws Errc::sieve_too_small when n exceeds the table.
  void require(std::uint64_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

enum class DiscriminantKind {
  squarefree_1mod4,  // d = 1 mod 4, squarefree
  four_m_3mod4,      // d = 4m, m = 3 mod 4 squarefree
  eight_m_odd,       // d = 8m, m odd squarefree (equivalently 4m with m = 2 mod 4)
};

struct FundamentalDiscriminant {
  std::uint64_t d;
  DiscriminantKind kind;
};

std::optional<DiscriminantKind> classify_discriminant(std::uint64_t d);

/// Positive fundamental discriminants. d = 1 is not counted.
bool is_fundamental_discriminant(std::int64_t d);

/// Ascending list of fundamental discriminants 1 < d <= x.
std::vector<FundamentalDiscriminant> enumerate_fundamental_discriminants(std::uint64_t x,
                                                                         const FactorSieve& sieve);

bool is_squarefree_trial(std::uint64_t n);

}  // namespace ratios
