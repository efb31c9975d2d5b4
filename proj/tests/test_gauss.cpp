#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "ratios/character.hpp"
#include "ratios/error.hpp"
#include "ratios/gauss.hpp"

using namespace ratios;

namespace {

const Complex I(0.0, 1.0);

// ((1-i)/2 + (-1/n)(1+i)/2) τ
Complex normalize(std::uint64_t n, Complex tau) {
  double sign = n % 4 == 1 ? 1.0 : -1.0;
  return ((1.0 - I) / 2.0 + sign * (1.0 + I) / 2.0) * tau;
}

DirichletChar kronecker_mod(std::int64_t top, std::uint64_t modulus) {
  DirichletChar chi;
  chi.modulus = modulus;
  chi.values.resize(modulus);
  for (std::uint64_t r = 0; r < modulus; ++r) chi.values[r] = std::int8_t(kronecker(top, std::int64_t(r)));
  return chi;
}

}  // namespace

TEST_SUITE("gauss") {
  TEST_CASE("tau_bruteforce examples") {
    CHECK(std::abs(tau_bruteforce(jacobi_char(3), 1) - I * std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(tau_bruteforce(jacobi_char(5), 0)) < 1e-12);
    CHECK(std::abs(tau_bruteforce(jacobi_char(15), 15)) < 1e-12);
  }

  TEST_CASE("tau_bruteforce agrees with the Euler-criterion oracle") {
    for (std::uint64_t n = 1; n <= 61; n += 2) {
      for (std::int64_t q = -3; q <= 20; ++q) {
        REQUIRE(std::abs(tau_bruteforce(jacobi_char(n), q) - oracle::gauss_sum(n, q)) < 1e-9);
      }
    }
  }

  TEST_CASE("G_quadratic examples") {
    FactorSieve sieve(100);
    CHECK(std::abs(G_quadratic(3, 1, sieve) - std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(G_quadratic(9, 1, sieve)) < 1e-12);
    CHECK(std::abs(G_quadratic(15, 1, sieve) - std::sqrt(15.0)) < 1e-12);
    CHECK(std::abs(G_quadratic(15, 1, sieve) - normalize(15, tau_bruteforce(jacobi_char(15), 1))) < 1e-12);
  }

  TEST_CASE("G_prime_power examples") {
    CHECK(std::abs(G_prime_power(3, 2, 3) - (-3.0)) < 1e-12);
    CHECK(std::abs(G_prime_power(5, 2, 25) - 20.0) < 1e-12);
    CHECK(std::abs(G_prime_power(3, 1, 3)) < 1e-12);
  }

  TEST_CASE("G_prime_power against normalized direct sums") {
    for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
      std::uint64_t pk = 1;
      for (std::uint32_t k = 1; pk * p <= 1400; ++k) {
        pk *= p;
        for (std::int64_t q = 0; q <= 60; ++q) {
          Complex expect = normalize(pk, oracle::gauss_sum(pk, q));
          REQUIRE(std::abs(G_prime_power(p, k, q) - expect) < 1e-9);
        }
      }
    }
  }

  TEST_CASE("G_quadratic against the normalized brute force, odd n < 1000") {
    FactorSieve sieve(1000);
    double worst = 0.0;
    for (std::uint64_t n = 1; n <= 999; n += 2) {
      DirichletChar chi = jacobi_char(n);
      for (std::int64_t q = 0; q <= 60; ++q) {
        worst = std::max(worst, std::abs(G_quadratic(n, q, sieve) - normalize(n, tau_bruteforce(chi, q))));
      }
    }
    CHECK(worst < 1e-9);
  }

  TEST_CASE("twisted multiplicativity of tau for coprime moduli") {
    for (std::uint64_t n1 = 1; n1 <= 45; n1 += 2) {
      for (std::uint64_t n2 = 1; n2 <= 45; n2 += 2) {
        if (std::gcd(n1, n2) != 1) continue;
        for (std::int64_t q = 0; q <= 40; q += 3) {
          Complex lhs = tau_bruteforce(jacobi_char(n1 * n2), q);
          Complex rhs = double(jacobi(std::int64_t(n2), n1)) * double(jacobi(std::int64_t(n1), n2)) *
                        tau_bruteforce(jacobi_char(n1), q) * tau_bruteforce(jacobi_char(n2), q);
          REQUIRE(std::abs(lhs - rhs) < 1e-9);
        }
      }
    }
    // a few pairs near the top of the range
    for (auto [n1, n2] : {std::pair<std::uint64_t, std::uint64_t>{199, 197}, {195, 191}, {171, 185}}) {
      Complex lhs = tau_bruteforce(jacobi_char(n1 * n2), 7);
      Complex rhs = double(jacobi(std::int64_t(n2), n1)) * double(jacobi(std::int64_t(n1), n2)) *
                    tau_bruteforce(jacobi_char(n1), 7) * tau_bruteforce(jacobi_char(n2), 7);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }

  TEST_CASE("primitive reduction and |tau| = sqrt(n)") {
    FactorSieve sieve(1000);
    for (std::uint64_t n = 3; n <= 399; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      Complex t1 = tau_quadratic(n, 1, sieve);
      CHECK(std::abs(std::abs(t1) - std::sqrt(double(n))) < 1e-9);
      for (std::int64_t q = 1; q <= 30; ++q) {
        if (std::gcd<std::uint64_t, std::uint64_t>(std::uint64_t(q), n) != 1) continue;
        REQUIRE(std::abs(tau_quadratic(n, q, sieve) - double(jacobi(q, n)) * t1) < 1e-9);
      }
    }
  }

  TEST_CASE("tau_4l examples") {
    FactorSieve sieve(100);
    CHECK(std::abs(tau_4l(5, 3, sieve)) < 1e-12);
    CHECK(std::abs(tau_4l(5, 2, sieve) + 2.0 * tau_quadratic(5, 2, sieve)) < 1e-12);
    CHECK(std::abs(tau_4l(3, 1, sieve) - 2.0 * std::sqrt(3.0)) < 1e-12);
  }

  TEST_CASE("tau_4l against the modulus-4l character") {
    FactorSieve sieve(1000);
    for (std::uint64_t l = 1; l <= 99; l += 2) {
      DirichletChar chi = kronecker_mod(std::int64_t(4 * l), 4 * l);
      for (std::int64_t q = 0; q <= 40; ++q) {
        REQUIRE(std::abs(tau_4l(l, q, sieve) - tau_bruteforce(chi, q)) < 1e-9);
      }
    }
  }

  TEST_CASE("epsilon factor examples") {
    FactorSieve sieve(100);
    for (std::uint64_t n : {5u, 3u, 15u}) {
      auto r = epsilon_factor(QuadChar::make(n, sieve), sieve);
      CHECK(std::abs(r.epsilon - 1.0) < 1e-12);
    }
    CHECK(std::abs(epsilon_factor(QuadChar::make(3, sieve), sieve).a - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(epsilon_factor(QuadChar::make(5, sieve), sieve).a - 1.0) < 1e-15);
  }

  TEST_CASE("epsilon factor has modulus one for primitive characters") {
    FactorSieve sieve(1000);
    for (std::uint64_t n = 1; n <= 999; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      REQUIRE(std::abs(std::abs(epsilon_factor(QuadChar::make(n, sieve), sieve).epsilon) - 1.0) < 1e-9);
    }
  }

  TEST_CASE("epsilon factor rejects non-primitive characters") {
    FactorSieve sieve(100);
    try {
      epsilon_factor(QuadChar::make(9, sieve), sieve);
      FAIL("expected not_primitive");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_primitive);
    }
  }

  TEST_CASE("QuadChar fields") {
    FactorSieve sieve(100);
    auto c = QuadChar::make(45, sieve);
    CHECK(c.n0 == 5);
    CHECK(c.n1 == 3);
    CHECK(c.even);
    CHECK_FALSE(c.primitive);
    auto d = QuadChar::make(7, sieve);
    CHECK_FALSE(d.even);
    CHECK(d.primitive);
  }

  TEST_CASE("psi8 characters and their Gauss sums") {
    for (int j : {1, -1, 2, -2}) {
      for (std::int64_t m = -20; m <= 20; ++m) REQUIRE(psi8(j, m) == kronecker(4 * j, m));
      DirichletChar chi = kronecker_mod(4 * j, 8);
      for (std::int64_t q = 0; q < 16; ++q) REQUIRE(std::abs(psi8_tau(j, q) - tau_bruteforce(chi, q)) < 1e-12);
    }
    CHECK(std::abs(psi8_tau(0, 5) - 1.0) < 1e-15);
  }
}
