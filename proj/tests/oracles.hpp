#pragma once

// Small independent reference implementations shared by the unit tests.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

inline std::vector<std::pair<std::uint64_t, int>> trial_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int mobius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : trial_factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::uint64_t p) {
  std::int64_t r = a % std::int64_t(p);
  if (r < 0) r += std::int64_t(p);
  if (r == 0) return 0;
  return powmod(std::uint64_t(r), (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Jacobi symbol (a/n), n odd positive, as a product of Legendre symbols.
inline int jacobi(std::int64_t a, std::uint64_t n) {
  int v = 1;
  for (auto [p, e] : trial_factor(n)) {
    int l = legendre(a, p);
    for (int i = 0; i < e; ++i) v *= l;
  }
  return v;
}

// (a/n) for odd n, Σ_j (j/n) e(jq/n) summed directly.
inline Complex gauss_sum(std::uint64_t n, std::int64_t q) {
  Complex acc = 0.0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::uint64_t j = 0; j < n; ++j) {
    int c = jacobi(std::int64_t(j), n);
    if (c == 0) continue;
    double ang = two_pi * double((std::int64_t(j) * q) % std::int64_t(n)) / double(n);
    acc += double(c) * Complex(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// Σ_{m <= M} a_m m^{-s} with a_m = (m/n), a plain truncated Dirichlet series.
inline Complex dirichlet_series_jacobi(Complex s, std::uint64_t n, std::uint64_t M) {
  Complex acc = 0.0;
  for (std::uint64_t m = M; m >= 1; --m) {
    int c = jacobi(std::int64_t(m), n);
    if (c) acc += double(c) * std::exp(-s * std::log(double(m)));
  }
  return acc;
}

// Primes up to n by the plain sieve of Eratosthenes.
inline std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
  std::vector<bool> comp(std::size_t(n) + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (comp[i]) continue;
    out.push_back(std::uint32_t(i));
    for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
  }
  return out;
}

}  // namespace oracle
