#include "ratios/arith.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "ratios/error.hpp"

namespace ratios {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::sieve_too_small: return "sieve-too-small";
    case Errc::pole: return "pole";
    case Errc::not_primitive: return "not-primitive";
    case Errc::modulus_too_large: return "modulus-too-large";
    case Errc::zero_detected: return "zero-detected";
    case Errc::divergent_region: return "divergent-region";
    case Errc::invalid_shifts: return "invalid-shifts";
    case Errc::pole_proximity: return "pole-proximity";
    case Errc::out_of_strip: return "out-of-strip";
    case Errc::io: return "io";
    case Errc::version_mismatch: return "version-mismatch";
    case Errc::usage: return "usage";
  }
  return "unknown";
}

int jacobi(std::int64_t a, std::uint64_t n) noexcept {
  // Binary algorithm: strip factors of two with the (2/n) rule, swap with
  // reciprocity.
  std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t r = a % m;
  if (r < 0) r += m;
  auto x = static_cast<std::uint64_t>(r);
  std::uint64_t y = n;
  int t = 1;
  while (x != 0) {
    int tz = std::countr_zero(x);
    x >>= tz;
    if ((tz & 1) && ((y & 7) == 3 || (y & 7) == 5)) t = -t;
    if ((x & 3) == 3 && (y & 3) == 3) t = -t;
    std::uint64_t tmp = x;
    x = y % tmp;
    y = tmp;
  }
  return y == 1 ? t : 0;
}

int kronecker(std::int64_t a, std::int64_t n) noexcept {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  auto un = static_cast<std::uint64_t>(n);
  int v = std::countr_zero(un);
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    un >>= v;
    if (v & 1) {
      std::int64_t a8 = ((a % 8) + 8) % 8;
      if (a8 == 3 || a8 == 5) result = -result;
    }
  }
  if (un == 1) return result;
  return result * jacobi(a, un);
}

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit), spf_(std::size_t(limit) + 1, 0) {
  // Linear sieve.
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      std::uint64_t ip = std::uint64_t(i) * p;
      if (p > spf_[i] || ip > limit) break;
      spf_[ip] = p;
    }
  }
}

void FactorSieve::require(std::uint64_t n) const {
  if (n > limit_) {
    throw Error(Errc::sieve_too_small,
                std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
  }
}

std::uint32_t FactorSieve::spf(std::uint64_t n) const {
  require(n);
  return spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  require(n);
  return n >= 2 && spf_[n] == n;
}

Factorization FactorSieve::factor(std::uint64_t n) const {
  require(n);
  Factorization f;
  f.n = n;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.pairs.push_back({p, e});
  }
  return f;
}

int FactorSieve::mobius(std::uint64_t n) const {
  require(n);
  int mu = 1;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return mu;
}

bool FactorSieve::is_squarefree(std::uint64_t n) const { return mobius(n) != 0; }

int FactorSieve::omega(std::uint64_t n) const {
  require(n);
  int w = 0;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    while (n % p == 0) n /= p;
    ++w;
  }
  return w;
}

SquarefreeKernel FactorSieve::squarefree_kernel(std::uint64_t n) const {
  require(n);
  SquarefreeKernel k{1, 1};
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e & 1) k.n0 *= p;
    for (std::uint32_t i = 0; i < e / 2; ++i) k.n1 *= p;
  }
  return k;
}

Complex FactorSieve::a_t(std::uint64_t l, Complex t) const {
  require(l);
  Complex acc = 1.0;
  while (l > 1) {
    std::uint32_t p = spf_[l];
    while (l % p == 0) l /= p;
    acc *= 1.0 - std::exp(-t * std::log(double(p)));
  }
  return acc;
}

bool is_squarefree_trial(std::uint64_t n) {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

std::optional<DiscriminantKind> classify_discriminant(std::uint64_t d) {
  if (d <= 1) return std::nullopt;
  if (d % 4 == 1) {
    if (is_squarefree_trial(d)) return DiscriminantKind::squarefree_1mod4;
    return std::nullopt;
  }
  if (d % 4 != 0) return std::nullopt;
  std::uint64_t m = d / 4;
  if (m % 4 == 3 && is_squarefree_trial(m)) return DiscriminantKind::four_m_3mod4;
  if (m % 4 == 2 && is_squarefree_trial(m)) return DiscriminantKind::eight_m_odd;
  return std::nullopt;
}

bool is_fundamental_discriminant(std::int64_t d) {
  return d > 1 && classify_discriminant(static_cast<std::uint64_t>(d)).has_value();
}

std::vector<FundamentalDiscriminant> enumerate_fundamental_discriminants(std::uint64_t x,
                                                                         const FactorSieve& sieve) {
  sieve.require(x);
  std::vector<FundamentalDiscriminant> out;
  for (std::uint64_t d = 2; d <= x; ++d) {
    switch (d % 16) {
      case 1: case 5: case 9: case 13:
        if (sieve.mobius(d) != 0) out.push_back({d, DiscriminantKind::squarefree_1mod4});
        break;
      case 12:
        if (sieve.mobius(d / 4) != 0) out.push_back({d, DiscriminantKind::four_m_3mod4});
        break;
      case 8:
        if (sieve.mobius(d / 8) != 0) out.push_back({d, DiscriminantKind::eight_m_odd});
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace ratios
