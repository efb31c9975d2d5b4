#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ratios/arith.hpp"
#include "ratios/character.hpp"
#include "ratios/empirical.hpp"
#include "ratios/error.hpp"
#include "ratios/lfunc.hpp"
#include "ratios/special.hpp"

using namespace ratios;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

bool fundamental(std::uint64_t d) {
  if (d % 4 == 1) return oracle::mobius(d) != 0;
  if (d % 4 != 0) return false;
  std::uint64_t m = d / 4;
  return (m % 4 == 2 || m % 4 == 3) && oracle::mobius(m) != 0;
}

DirichletChar top_char(std::uint64_t d) {
  DirichletChar chi;
  chi.modulus = d;
  chi.values.resize(d);
  for (std::uint64_t r = 0; r < d; ++r) chi.values[r] = std::int8_t(kronecker(std::int64_t(d), std::int64_t(r)));
  return chi;
}

DirichletChar bottom_char(std::uint64_t n) {
  DirichletChar chi;
  chi.modulus = n;
  chi.values.resize(n);
  for (std::uint64_t r = 0; r < n; ++r) chi.values[r] = std::int8_t(oracle::jacobi(std::int64_t(r), n));
  return chi;
}

Complex L(Complex s, const DirichletChar& chi) { return l_hurwitz_table(s, chi).value; }

Complex log_deriv(Complex s, const DirichletChar& chi) {
  const double h = 1e-3;
  Complex d = (-L(s + 2 * h, chi) + 8.0 * L(s + h, chi) - 8.0 * L(s - h, chi) + L(s - 2 * h, chi)) / (12.0 * h);
  return d / L(s, chi);
}

// Direct weighted sums over n <= 28X, one Hurwitz evaluation per L-value.
Complex oracle_sum(int theorem, Complex a, Complex b, double X) {
  const std::uint64_t cap = std::uint64_t(28 * X);
  Complex acc = 0.0;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    double f = std::exp(-double(n) / X);
    if (theorem == 1) {
      if (n != 1 && !fundamental(n)) continue;
      DirichletChar chi = top_char(n);
      acc += L(0.5 + a, chi) / L(0.5 + b, chi) * f;
      continue;
    }
    if (n % 2 == 0) continue;
    if (theorem == 4 && oracle::mobius(n) == 0) continue;
    DirichletChar chi = bottom_char(n);
    if (theorem == 2) {
      double c2 = oracle::jacobi(2, n);
      Complex num = L(0.5 + a, chi) * (1.0 - c2 * std::pow(2.0, -(0.5 + a)));
      Complex den = L(0.5 + b, chi) * (1.0 - c2 * std::pow(2.0, -(0.5 + b)));
      acc += num / den * f;
    } else {
      acc += log_deriv(0.5 + a, chi) * f;
    }
  }
  return acc;
}

SweepConfig config(int theorem, Complex a, Complex b) {
  SweepConfig cfg;
  cfg.theorem = theorem;
  cfg.alpha = a;
  cfg.beta = b;
  return cfg;
}

}  // namespace

TEST_SUITE("empirical") {
  TEST_CASE("tiny X against the direct Hurwitz oracle, AFE route") {
    FactorSieve sieve(2000);
    const double X = 50;
    struct Case {
      int theorem;
      Complex a, b;
      double tol;
    };
    for (const Case& c : {Case{1, 0.2, 0.3, 1e-8}, Case{1, Complex(0.1, 1.5), 0.35, 1e-8},
                          Case{2, 0.2, 0.3, 1e-8}, Case{2, Complex(0.3, -0.4), 0.2, 1e-8},
                          Case{3, 0.2, 0.0, 1e-7}, Case{4, 0.2, 0.0, 1e-7}, Case{4, Complex(0.15, 2.0), 0.0, 1e-7}}) {
      SweepConfig cfg = config(c.theorem, c.a, c.b);
      cfg.levels.hurwitz_tier = 0;
      Complex emp = empirical(cfg, X, sieve);
      Complex ref = oracle_sum(c.theorem, c.a, c.b, X);
      INFO("theorem ", c.theorem);
      CHECK(rel(emp, ref) < c.tol);
      cfg.levels.hurwitz_tier = 1000;
      CHECK(rel(empirical(cfg, X, sieve), ref) < c.tol);
    }
  }

  TEST_CASE("equal shifts give the bare weight sums") {
    FactorSieve sieve(5600);
    const double X = 200;
    Complex s1 = 0.0, s2 = 0.0;
    for (std::uint64_t n = 1; n <= 5600; ++n) {
      double f = std::exp(-double(n) / X);
      if (n == 1 || fundamental(n)) s1 += f;
      if (n % 2 == 1) s2 += f;
    }
    CHECK(rel(empirical(config(1, 0.25, 0.25), X, sieve), s1) < 1e-13);
    CHECK(rel(empirical(config(2, 0.25, 0.25), X, sieve), s2) < 1e-13);
  }

  TEST_CASE("first term of the odd-moduli sum is the trivial character") {
    FactorSieve sieve(1000);
    Complex a(0.2, 0.7), b = 0.3;
    auto terms = sweep_terms(config(2, a, b), 100, sieve);
    CHECK(rel(terms[1], zeta_removed(0.5 + a, 2) / zeta_removed(0.5 + b, 2)) < 1e-13);
    CHECK(terms[2] == Complex(0.0));
    auto t3 = sweep_terms(config(3, 0.2, 0.0), 100, sieve);
    CHECK(rel(t3[1], zeta_deriv(0.7) / zeta(0.7)) < 1e-12);
  }

  TEST_CASE("squarefree restriction shares the log-derivative terms") {
    FactorSieve sieve(5000);
    auto t3 = sweep_terms(config(3, 0.2, 0.0), 5000, sieve);
    auto t4 = sweep_terms(config(4, 0.2, 0.0), 5000, sieve);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      if (n % 2 == 1 && sieve.is_squarefree(n)) {
        REQUIRE(t4[n] == t3[n]);
      } else {
        REQUIRE(t4[n] == Complex(0.0));
      }
    }
  }

  TEST_CASE("log-derivative for a prime square modulus") {
    FactorSieve sieve(1000);
    Complex s(0.7, 0.3);
    Complex zl = zeta_deriv(s) / zeta(s);
    for (std::uint64_t p : {3u, 5u, 7u, 31u}) {
      // χ_{p²} is principal mod p: L = ζ(s)(1 - p^{-s})
      Complex expect = zl + std::log(double(p)) / (std::pow(double(p), s) - 1.0);
      CHECK(std::abs(composite_log_derivative(s, p * p, zl, sieve) - expect) < 1e-13);
    }
  }

  TEST_CASE("weight tail beyond the cap is negligible") {
    FactorSieve sieve(56000);
    SweepConfig cfg = config(1, 0.2, 0.3);
    Complex a = empirical(cfg, 1000, sieve);
    cfg.cap_factor = 56;
    Complex b = empirical(cfg, 1000, sieve);
    CHECK(rel(a, b) < 1e-9);
  }

  TEST_CASE("conjugate shifts give the conjugate sum") {
    FactorSieve sieve(5000);
    Complex a(0.2, 0.3), b(0.3, -0.1);
    for (int th : {1, 2}) {
      Complex v = empirical(config(th, a, b), 150, sieve);
      Complex w = empirical(config(th, std::conj(a), std::conj(b)), 150, sieve);
      CHECK(std::abs(v - std::conj(w)) < 1e-12 * std::abs(v));
    }
    Complex v = empirical(config(3, Complex(0.2, 0.4), 0.0), 150, sieve);
    Complex w = empirical(config(3, Complex(0.2, -0.4), 0.0), 150, sieve);
    CHECK(std::abs(v - std::conj(w)) < 1e-12 * std::abs(v));
    CHECK(std::isfinite(std::abs(empirical(config(3, 2.0, 0.0), 150, sieve))));
  }

  TEST_CASE("sweeps refuse shifts below the floor") {
    FactorSieve sieve(2000);
    CHECK_THROWS_AS(empirical(config(2, 0.2, 0.01), 50, sieve), Error);
    CHECK_THROWS_AS(empirical(config(3, Complex(0.04, 1.0), 0.0), 50, sieve), Error);
    CHECK_NOTHROW(empirical(config(2, 0.01, 0.2), 50, sieve));
  }

  TEST_CASE("weighted sums do not depend on the worker count") {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g(0.0, 1e3);
    std::vector<Complex> terms(200001);
    for (auto& t : terms) t = Complex(g(rng), g(rng));
    Complex one = weighted_sum(terms, 7000.0, {}, 1);
    for (unsigned w : {2u, 3u, 4u, 8u}) {
      Complex many = weighted_sum(terms, 7000.0, {}, w);
      CHECK(many.real() == one.real());
      CHECK(many.imag() == one.imag());
    }
  }

  TEST_CASE("sweeps are bit-identical across workers") {
    FactorSieve sieve(9000);
    std::vector<double> xs{100.0, 300.0};
    SweepConfig cfg = config(2, 0.25, 0.3);
    cfg.levels.hurwitz_tier = 100;
    cfg.workers = 1;
    auto one = empirical_sweep(cfg, xs, sieve);
    for (unsigned w : {4u, 8u}) {
      cfg.workers = w;
      auto many = empirical_sweep(cfg, xs, sieve);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        CHECK(many[i].real() == one[i].real());
        CHECK(many[i].imag() == one[i].imag());
      }
    }
    cfg.workers = 1;
    CHECK(empirical(cfg, 300.0, sieve) == one[1]);
  }

  TEST_CASE("error slope fit") {
    std::vector<ReportRow> rows;
    for (double x : {100.0, 1e3, 1e4, 1e5}) {
      ReportRow r;
      r.X = x;
      r.abs_err = 3.0 * std::pow(x, 0.42) * (x < 1e3 ? 50.0 : 1.0);
      rows.push_back(r);
    }
    CHECK(fit_error_slope(rows) == doctest::Approx(0.42).epsilon(1e-12));
    rows.resize(2);
    CHECK(std::isnan(fit_error_slope(rows)));
  }

  TEST_CASE("comparison report rows") {
    FactorSieve sieve(3000);
    std::vector<double> xs{20.0, 50.0, 100.0};
    auto rep = compare(config(2, 0.2, 0.3), xs, sieve);
    REQUIRE(rep.rows.size() == xs.size());
    CHECK(rep.theorem == 2);
    CHECK(rep.theorem_exponent == doctest::Approx(0.6));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& r = rep.rows[i];
      CHECK(r.X == xs[i]);
      CHECK(r.abs_err == doctest::Approx(std::abs(r.empirical - r.term1 - r.term2)).epsilon(1e-14));
      CHECK(r.rel_err == doctest::Approx(r.abs_err / std::abs(r.term1 + r.term2)));
    }
    CHECK(std::isnan(rep.fitted_slope));
    auto rep3 = compare(config(3, 0.2, 0.0), xs, sieve);
    CHECK(rep3.rows[0].beta == rep3.rows[0].alpha);
  }
}
