#include "ratios/gauss.hpp"

#include <cmath>

#include "ratios/error.hpp"
#include "ratios/special.hpp"

namespace ratios {

namespace {

// e(r/n) for 0 <= r < n
Complex unit_root(std::uint64_t r, std::uint64_t n) {
  double angle = 2.0 * kPi * double(r) / double(n);
  return {std::cos(angle), std::sin(angle)};
}

std::uint64_t mod_u(std::int64_t a, std::uint64_t n) {
  std::int64_t r = a % std::int64_t(n);
  if (r < 0) r += std::int64_t(n);
  return std::uint64_t(r);
}

}  // namespace

QuadChar QuadChar::make(std::uint64_t n, const FactorSieve& sieve) {
  if (n % 2 == 0) throw Error(Errc::usage, "QuadChar needs odd n");
  auto k = sieve.squarefree_kernel(n);
  QuadChar c;
  c.n = n;
  c.n0 = k.n0;
  c.n1 = k.n1;
  c.even = n % 4 == 1;
  c.primitive = k.n1 == 1;
  return c;
}

Complex tau_bruteforce(const DirichletChar& chi, std::int64_t q) {
  std::uint64_t n = chi.modulus;
  std::uint64_t qr = mod_u(q, n);
  Complex acc = 0.0;
  for (std::uint64_t j = 0; j < n; ++j) {
    int v = chi.values[j];
    if (v == 0) continue;
    Complex e = unit_root((j * qr) % n, n);
    acc += double(v) * e;
  }
  return acc;
}

Complex G_prime_power(std::uint64_t p, std::uint32_t k, std::int64_t q) {
  if (k == 0) return 1.0;
  // alpha = ord_p(q); q = 0 behaves as alpha = infinity
  std::uint32_t alpha = 0;
  std::int64_t rest = q;
  bool infinite = q == 0;
  if (!infinite) {
    while (rest % std::int64_t(p) == 0) {
      rest /= std::int64_t(p);
      ++alpha;
    }
  }
  auto pw = [p](std::uint32_t e) {
    double v = 1.0;
    for (std::uint32_t i = 0; i < e; ++i) v *= double(p);
    return v;
  };
  if (infinite || k <= alpha) {
    if (k % 2 == 1) return 0.0;
    return pw(k) - pw(k - 1);
  }
  if (k == alpha + 1) {
    if (k % 2 == 0) return -pw(alpha);
    return double(jacobi(rest, p)) * pw(alpha) * std::sqrt(double(p));
  }
  return 0.0;
}

Complex G_quadratic(std::uint64_t n, std::int64_t q, const FactorSieve& sieve) {
  Complex acc = 1.0;
  for (const auto& pp : sieve.factor(n).pairs) {
    acc *= G_prime_power(pp.prime, pp.exponent, q);
    if (acc == Complex(0.0)) break;
  }
  return acc;
}

Complex tau_quadratic(std::uint64_t n, std::int64_t q, const FactorSieve& sieve) {
  Complex g = G_quadratic(n, q, sieve);
  if (n % 4 == 1) return g;
  return Complex(0.0, 1.0) * g;  // G = -i τ
}

Complex tau_4l(std::uint64_t l, std::int64_t q, const FactorSieve& sieve) {
  std::int64_t q4 = std::int64_t(mod_u(q, 4));
  if (l % 4 == 1) {
    if (q4 % 2 == 1) return 0.0;
    Complex t = tau_quadratic(l, q, sieve);
    return q4 == 2 ? -2.0 * t : 2.0 * t;
  }
  if (q4 % 2 == 0) return 0.0;
  Complex t = tau_quadratic(l, q, sieve);
  const Complex i(0.0, 1.0);
  return q4 == 1 ? -2.0 * i * t : 2.0 * i * t;
}

RootNumber epsilon_factor(const QuadChar& chi, const FactorSieve& sieve) {
  if (!chi.primitive) {
    throw Error(Errc::not_primitive, "root number of non-primitive χ_" + std::to_string(chi.n));
  }
  RootNumber r;
  r.a = chi.even ? Complex(1.0) : Complex(0.0, -1.0);
  r.epsilon = r.a * tau_quadratic(chi.n, 1, sieve) / std::sqrt(double(chi.n));
  return r;
}

Complex psi8_tau(int j, std::int64_t q) {
  if (j == 0) return 1.0;
  static const DirichletChar tables[4] = {psi8_char(1), psi8_char(-1), psi8_char(2),
                                          psi8_char(-2)};
  int idx = j == 1 ? 0 : j == -1 ? 1 : j == 2 ? 2 : 3;
  return tau_bruteforce(tables[idx], q);
}

}  // namespace ratios
