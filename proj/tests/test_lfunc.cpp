#include "doctest.h"
#include "oracles.hpp"
#include "ratios/character.hpp"
#include "ratios/error.hpp"
#include "ratios/gauss.hpp"
#include "ratios/lfunc.hpp"
#include "ratios/special.hpp"

using namespace ratios;

namespace {

// Σ_{m <= M} χ(m) m^{-s} for a character given by its values mod n.
Complex periodic_sum(Complex s, const std::vector<int>& vals, std::uint64_t M, bool odd_only = false) {
  Complex acc = 0.0;
  const std::uint64_t n = vals.size();
  for (std::uint64_t m = M; m >= 1; --m) {
    if (odd_only && m % 2 == 0) continue;
    int c = vals[m % n];
    if (c) acc += double(c) * std::exp(-s * std::log(double(m)));
  }
  return acc;
}

std::vector<int> jacobi_values(std::uint64_t n) {
  std::vector<int> v(n);
  for (std::uint64_t r = 0; r < n; ++r) v[r] = oracle::jacobi(std::int64_t(r), n);
  return v;
}

}  // namespace

TEST_SUITE("lfunc") {
  TEST_CASE("l_hurwitz examples") {
    Complex direct = periodic_sum(3.0, jacobi_values(5), 1'000'000);
    CHECK(std::abs(l_hurwitz(3.0, 5) - direct) < 1e-9);
    CHECK(std::abs(l_hurwitz(2.0, 1) - zeta(2.0)) < 1e-13);
    // χ_5 is even with ε = 1: L(s) = (π/5)^{s-1/2} Γ_e(s) L(1-s); at s = 1/2 test the neighbourhood
    Complex s(0.5, 0.3);
    Complex rhs = std::pow(Complex(kPi / 5.0), s - 0.5) * gamma_e(s) * l_hurwitz(1.0 - s, 5);
    CHECK(std::abs(l_hurwitz(s, 5) - rhs) < 1e-10);
    try {
      l_hurwitz(0.5, 10001);
      FAIL("expected modulus_too_large");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::modulus_too_large);
    }
  }

  TEST_CASE("classical functional equation for primitive characters") {
    FactorSieve sieve(1000);
    for (std::uint64_t n = 3; n <= 100; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      bool even = n % 4 == 1;
      Complex eps = epsilon_factor(QuadChar::make(n, sieve), sieve).epsilon;
      for (Complex s : {Complex(0.3), Complex(0.5, 0.2), Complex(-0.4)}) {
        Complex gam = even ? gamma_e(s) : gamma_o(s);
        Complex rhs = eps * std::pow(Complex(kPi / double(n)), s - 0.5) * gam * l_hurwitz(1.0 - s, n);
        REQUIRE(std::abs(l_hurwitz(s, n) - rhs) < 1e-8);
      }
    }
  }

  TEST_CASE("l_afe agrees with l_hurwitz on squarefree odd moduli") {
    FactorSieve sieve(1000);
    Complex s(0.75, 0.0);
    for (std::uint64_t n = 1; n <= 1000; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      REQUIRE(std::abs(l_afe(s, n).value - l_hurwitz(s, n)) < 1e-8);
    }
    Complex t(0.6, 5.0);
    for (std::uint64_t n : {5u, 7u, 399u, 997u}) CHECK(std::abs(l_afe(t, n).value - l_hurwitz(t, n)) < 1e-8);
  }

  TEST_CASE("l_afe at large modulus") {
    std::uint64_t n = 100001;
    while (!is_squarefree_trial(n)) n += 2;
    auto v = l_afe(0.75, n);
    CHECK(v.err_est <= 1e-8);
    CHECK(v.method == LMethod::afe);
    std::uint64_t m = 100001;
    while (!(is_squarefree_trial(m) && m % 4 == 1)) m += 2;
    CHECK(std::abs(l_afe(0.6, m).value.imag()) < 1e-13);
    // the Hurwitz route stays exact at this size, so compare once
    CHECK(std::abs(l_afe(0.75, 9999 - 2 * 3).value - l_hurwitz(0.75, 9993)) < 1e-8);
  }

  TEST_CASE("l_afe derivative against finite differences") {
    for (std::uint64_t n : {5u, 13u, 1023u}) {
      if (!is_squarefree_trial(n)) continue;
      Complex s(0.7, 0.1);
      double h = 1e-5;
      Complex fd = (l_hurwitz(s + h, n) - l_hurwitz(s - h, n)) / (2.0 * h);
      CHECK(std::abs(l_afe(s, n, {}, true).deriv - fd) < 1e-6);
    }
  }

  TEST_CASE("l_afe rejects non-primitive characters") {
    try {
      l_afe(0.75, 45);
      FAIL("expected not_primitive");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_primitive);
    }
  }

  TEST_CASE("l2removed examples") {
    FactorSieve sieve(1000);
    for (Complex s : {Complex(0.75), Complex(2.0, 1.0)}) {
      CHECK(std::abs(l2removed(s, 9, sieve) - zeta_removed(s, 2) * (1.0 - std::pow(3.0, -s))) < 1e-12);
      Complex expect = l_hurwitz(s, 15) * (1.0 - double(kronecker(2, 15)) * std::pow(2.0, -s));
      CHECK(std::abs(l2removed(s, 15, sieve) - expect) < 1e-12);
    }
    Complex direct = periodic_sum(3.0, jacobi_values(45), 1'000'000, true);
    CHECK(std::abs(l2removed(3.0, 45, sieve) - direct) < 1e-9);
  }

  TEST_CASE("log_derivative examples") {
    FactorSieve sieve(1'000'000);
    // -Σ Λ(m) χ_5(m) m^{-2}
    Complex acc = 0.0;
    for (std::uint32_t p : sieve.primes()) {
      double lp = std::log(double(p));
      int c = oracle::jacobi(std::int64_t(p), 5);
      double pk = p;
      int ck = c;
      while (pk <= 1e6) {
        acc -= double(ck) * lp / (pk * pk);
        pk *= p;
        ck *= c;
      }
    }
    CHECK(std::abs(log_derivative(2.0, 5) - acc) < 1e-7);
    CHECK(std::abs(log_derivative(0.8, 21).imag()) < 1e-12);
    Complex s(0.75, 0.0);
    double h = 1e-5;
    Complex fd = (l_hurwitz(s + h, 13) - l_hurwitz(s - h, 13)) / (2.0 * h) / l_hurwitz(s, 13);
    CHECK(std::abs(log_derivative(s, 13) - fd) < 1e-6);
  }

  TEST_CASE("log_derivative matches the von Mangoldt series at Re s = 2") {
    FactorSieve sieve(200000);
    for (std::uint64_t n = 3; n <= 50; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      Complex s(2.0, 0.5);
      Complex acc = 0.0;
      for (std::uint32_t p : sieve.primes()) {
        int c = kronecker(std::int64_t(p), std::int64_t(n));
        if (c == 0) continue;
        double lp = std::log(double(p));
        Complex pk_s = std::exp(-s * lp);
        Complex term = pk_s;
        double ck = c;
        for (double pk = p; pk <= 2e5; pk *= p) {
          acc -= ck * lp * term;
          term *= pk_s;
          ck *= c;
        }
      }
      REQUIRE(std::abs(log_derivative(s, n) - acc) < 1e-7);
    }
  }

  TEST_CASE("k_series examples") {
    FactorSieve sieve(1000);
    for (Complex s : {Complex(0.3), Complex(2.0, 1.0)}) {
      CHECK(std::abs(k_series(s, 5, sieve) - tau_quadratic(5, 1, sieve) * l_hurwitz(s, 5)) < 1e-10);
    }
    // direct Σ_{q <= 1e5} τ(χ_9, q) q^{-2}
    std::vector<Complex> tau(9);
    for (int r = 0; r < 9; ++r) tau[r] = oracle::gauss_sum(9, r);
    Complex acc = 0.0;
    for (std::uint64_t q = 100000; q >= 1; --q) acc += tau[q % 9] / (double(q) * double(q));
    CHECK(std::abs(k_series(2.0, 9, sieve) - acc) < 1e-6);
  }

  TEST_CASE("K reduces to tau(chi, 1) L for primitive moduli") {
    FactorSieve sieve(1000);
    for (std::uint64_t n = 3; n <= 100; n += 2) {
      if (!sieve.is_squarefree(n)) continue;
      Complex s(0.4, 1.0);
      REQUIRE(std::abs(k_series(s, n, sieve) - tau_quadratic(n, 1, sieve) * l_hurwitz(s, n)) < 1e-9);
    }
  }

  TEST_CASE("functional equation through K, including non-primitive moduli") {
    FactorSieve sieve(1000);
    CHECK(funceq_gauss_check(-0.5, 5, sieve) < 1e-9);
    CHECK(funceq_gauss_check(Complex(-1.5, 0.3), 9, sieve) < 1e-8);
    CHECK(funceq_gauss_check(-0.5, 15, sieve) < 1e-9);
    for (std::uint64_t n : {25u, 27u, 45u, 63u, 75u, 99u}) {
      CHECK(funceq_gauss_check(Complex(0.3, 2.0), n, sieve) < 1e-9);
    }
  }

  TEST_CASE("fundamental-discriminant series: partial sums against the closed form") {
    FactorSieve sieve(1'000'000);
    DirichletChar chi3 = jacobi_char(3), chi5 = jacobi_char(5), triv = jacobi_char(1);
    // tail over d > 1e6 is below Σ_{d > 1e6} d^{-2} = 1e-6
    CHECK(std::abs(l_D_partial(2.0, chi3, 1'000'000, sieve) - l_D_closed(2.0, chi3)) < 1e-6);
    CHECK(std::abs(l_D_partial(2.0, triv, 1'000'000, sieve) - l_D_closed(2.0, triv)) < 1e-6);
    CHECK(std::abs(l_D_partial(3.0, chi5, 1'000'000, sieve) - l_D_closed(3.0, chi5)) < 1e-9);
    CHECK(std::abs(l_D_partial(Complex(2.5, 3.0), chi5, 1'000'000, sieve) - l_D_closed(Complex(2.5, 3.0), chi5)) <
          1e-8);
    try {
      l_D_closed(1.0, chi3);
      FAIL("expected divergent_region");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::divergent_region);
    }
  }

  TEST_CASE("theta inversion examples") {
    FactorSieve sieve(100);
    CHECK(theta_funceq_check(5, 1.0, sieve) < 1e-10);
    CHECK(theta_funceq_check(3, 2.0, sieve) < 1e-10);
    for (double y : {0.1, 0.5, 2.0}) CHECK(theta_funceq_check(1, y, sieve) < 1e-10);
    for (std::uint64_t n = 1; n <= 50; n += 2) {
      for (double y : {0.3, 1.0, 3.0}) REQUIRE(theta_funceq_check(n, y, sieve) < 1e-10);
    }
  }

  TEST_CASE("quadratic evaluator agrees across the tier boundary") {
    std::vector<Complex> pts = {Complex(0.75), Complex(0.55, 2.0)};
    LEvalConfig hurwitz_cfg, afe_cfg;
    hurwitz_cfg.hurwitz_tier = 20000;
    afe_cfg.hurwitz_tier = 0;
    hurwitz_cfg.with_deriv = afe_cfg.with_deriv = true;
    QuadraticLEvaluator h(pts, 20000, hurwitz_cfg), a(pts, 20000, afe_cfg);
    LValue vh[2], va[2];
    for (std::int64_t d : {5, 8, 12, 13, -3, -4, -7, -8, -15, 997, -995, 1001, 1005, -1003, 9997, -9995}) {
      h.eval(d, vh);
      a.eval(d, va);
      CHECK(h.method_for(d) == LMethod::hurwitz);
      CHECK(a.method_for(d) == LMethod::afe);
      for (int i = 0; i < 2; ++i) {
        REQUIRE(std::abs(vh[i].value - va[i].value) < 1e-8);
        REQUIRE(std::abs(vh[i].deriv - va[i].deriv) < 1e-7);
      }
    }
  }

  TEST_CASE("quadratic evaluator matches the Kronecker-top Dirichlet series at Re s > 1") {
    std::vector<Complex> pts = {Complex(2.0, 0.5)};
    QuadraticLEvaluator ev(pts, 2000);
    LValue v[1];
    for (std::int64_t d : {8, 12, -4, -7, 1001}) {
      ev.eval(d, v);
      Complex acc = 0.0;
      for (std::int64_t m = 200000; m >= 1; --m) {
        int c = kronecker(d, m);
        if (c) acc += double(c) * std::exp(-pts[0] * std::log(double(m)));
      }
      CHECK(std::abs(v[0].value - acc) < 1e-5);
    }
  }
}
