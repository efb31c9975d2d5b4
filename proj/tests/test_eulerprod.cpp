#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ratios/error.hpp"
#include "ratios/eulerprod.hpp"
#include "ratios/special.hpp"

using namespace ratios;

namespace {

// Σ over squares N = j² <= bound and squarefree k | N, m = N/k, of
// μ(k) m^{-w} k^{-z} g(N); odd_only keeps odd N.
template <class G>
Complex square_divisor_sum(Complex w, Complex z, std::uint64_t bound, bool odd_only, G g) {
  Complex acc = 0.0;
  for (std::uint64_t j = 1; j * j <= bound; ++j) {
    if (odd_only && j % 2 == 0) continue;
    auto f = oracle::trial_factor(j);
    std::uint64_t n = j * j;
    double gn = g(f);
    // squarefree divisors of N are the products of subsets of the primes of j
    std::size_t r = f.size();
    for (std::uint64_t mask = 0; mask < (1u << r); ++mask) {
      std::uint64_t k = 1;
      int mu = 1;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1) {
          k *= f[i].first;
          mu = -mu;
        }
      }
      double m = double(n / k);
      acc += double(mu) * std::exp(-w * std::log(m) - z * std::log(double(k))) * gn;
    }
  }
  return acc;
}

template <class Fn>
Errc code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::usage;
}

}  // namespace

TEST_SUITE("eulerprod") {
  TEST_CASE("trivial products") {
    CHECK(std::abs(P_D(0.8, 0.8).value - 1.0) < 1e-15);
    CHECK(std::abs(P_D2(0.3, 0.3).value - 1.0) < 1e-15);
    CHECK(std::abs(residue_s1_AD(0.75, 0.75) - 1.0 / (2.0 * zeta(2.0))) < 1e-14);
    CHECK(std::abs(residue_s1_A(0.2, 0.2) - 0.5) < 1e-14);
    CHECK(std::abs(residue_s1_A(Complex(0.1, 0.4), Complex(0.1, 0.4)) - 0.5) < 1e-14);
  }

  TEST_CASE("P(3/2) is zeta(2)") {
    CHECK(std::abs(P_big(1.5).value - zeta(2.0)) < 1e-10);
    double beta = 0.3;
    CHECK(std::abs(P_big(1.5 - beta + beta).value - zeta(2.0)) < 1e-10);
  }

  TEST_CASE("P_D2 closed form on the anti-diagonal") {
    for (double r : {0.05, 0.1, 0.2}) {
      Complex lhs = P_D2(-r, r).value / (3.0 * zeta(2.0));
      Complex rhs = 1.0 / (4.0 * zeta_removed(2.0 - 2.0 * r, 2));
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }

  TEST_CASE("prime zeta tails against known constants") {
    // P(2), P(3): Σ_p p^{-2}, Σ_p p^{-3}
    const double p2 = 0.45224742004106549850;
    const double p3 = 0.17476263929944353642;
    auto head = [](double e, std::uint32_t cut) {
      double acc = 0.0;
      for (auto p : oracle::primes_upto(cut)) acc += std::pow(double(p), -e);
      return acc;
    };
    for (std::uint32_t cut : {10u, 1000u, 100000u}) {
      CHECK(std::abs(prime_zeta_tail(2.0, cut) - (p2 - head(2.0, cut))) < 1e-13);
      CHECK(std::abs(prime_zeta_tail(3.0, cut) - (p3 - head(3.0, cut))) < 1e-13);
    }
  }

  TEST_CASE("prime zeta tail against a longer explicit sum") {
    Complex e(1.7, 2.0);
    Complex direct = 0.0;
    auto ps = oracle::primes_upto(2'000'000);
    for (auto p : ps) {
      if (p > 1000) direct += std::exp(-e * std::log(double(p)));
    }
    Complex rest = prime_zeta_tail(e, 2'000'000);
    CHECK(std::abs(prime_zeta_tail(e, 1000) - (direct + rest)) < 1e-12);
    Complex dlog = 0.0;
    for (auto p : ps) {
      if (p > 1000) dlog += std::log(double(p)) * std::exp(-e * std::log(double(p)));
    }
    CHECK(std::abs(prime_zeta_log_tail(e, 1000) - (dlog + prime_zeta_log_tail(e, 2'000'000))) < 1e-11);
  }

  TEST_CASE("products are stable under a larger prime cutoff") {
    EulerSpec big{10'000'000};
    auto both = [&](auto fn) {
      EulerValue a = fn(EulerSpec{});
      EulerValue b = fn(big);
      CHECK(std::abs(a.value - b.value) < 1e-8);
      CHECK(std::abs(a.value - b.value) <= a.err_est + 1e-15);
    };
    both([](EulerSpec s) { return P_D(0.75, 0.25, s); });
    both([](EulerSpec s) { return P_D(0.5 + 0.3, 0.5 - 0.2, s); });
    both([](EulerSpec s) { return P_big(2.0, s); });
    both([](EulerSpec s) { return A_D_arith_factor(0.2, 0.3, s); });
    both([](EulerSpec s) { return P_D2(Complex(0.1, 1.0), 0.25, s); });
    CHECK(P_D(0.8, 0.3).err_est < 1e-8);
  }

  TEST_CASE("products agree with a naive product plus an explicit tail") {
    // ∏_{p <= 10^6} naive, then Σ_{p > 10^6} c_p to first order from the prime zeta tail
    auto ps = oracle::primes_upto(1'000'000);
    Complex z(0.9, 0.2), w(0.7, -0.1);
    Complex prod = 1.0;
    for (auto p : ps) {
      double dp = p;
      Complex c = (1.0 - std::pow(dp, z - w)) / ((std::pow(dp, z + w) - 1.0) * (dp + 1.0));
      prod *= 1.0 + c;
    }
    // c_p ≈ p^{-1-z-w} - p^{-1-2w} for large p
    Complex tail = prime_zeta_tail(1.0 + z + w, 1'000'000) - prime_zeta_tail(1.0 + 2.0 * w, 1'000'000);
    CHECK(std::abs(P_D(z, w).value - prod * std::exp(tail)) < 1e-9);
  }

  TEST_CASE("intro arithmetic factor matches P_D with swapped arguments") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.06, 0.45), im(-2.0, 2.0);
    for (int i = 0; i < 10; ++i) {
      Complex a(re(rng), im(rng)), b(re(rng), im(rng));
      REQUIRE(std::abs(A_D_arith_factor(a, b).value - P_D(0.5 + b, 0.5 + a).value) < 1e-8);
    }
  }

  TEST_CASE("residue of A_D against the square-indexed sum") {
    for (auto [w, z] : {std::pair<Complex, Complex>{1.5, 1.3}, {Complex(1.2, 0.5), 1.4}}) {
      auto g = [](const std::vector<std::pair<std::uint64_t, int>>& f) {
        double v = 1.0;
        for (auto [p, e] : f) v *= double(p) / double(p + 1);
        return v;
      };
      Complex brute = square_divisor_sum(w, z, 100'000'000, false, g) / (2.0 * zeta(2.0));
      CHECK(std::abs(residue_s1_AD(w, z) - brute) < 1e-6);
    }
  }

  TEST_CASE("residue of A against the square-indexed sum") {
    for (auto [a, b] : {std::pair<Complex, Complex>{1.0, 0.8}, {Complex(0.7, 0.5), 0.9}}) {
      auto g = [](const std::vector<std::pair<std::uint64_t, int>>& f) {
        double v = 1.0;
        for (auto [p, e] : f) v *= 1.0 - 1.0 / double(p);
        return v;
      };
      Complex brute = 0.5 * square_divisor_sum(0.5 + a, 0.5 + b, 100'000'000, true, g);
      CHECK(std::abs(residue_s1_A(a, b) - brute) < 1e-6);
    }
  }

  TEST_CASE("second-term coefficient: closed form against the cosine form") {
    for (auto [a, b] : {std::pair<Complex, Complex>{0.25, 0.3}, {0.2, 0.3}, {Complex(0.15, 0.4), 0.35}}) {
      Complex closed = residue_s_1malpha_A(a, b);
      Complex cosf = residue_s_1malpha_A_cos_form(a, b);
      CHECK(std::abs(closed - cosf) < 1e-10 * std::max(1.0, std::abs(cosf)));
      CHECK(std::isfinite(closed.real()));
    }
    // 1/ζ(1-α+β) vanishes on the diagonal
    CHECK(std::abs(residue_s_1malpha_A(0.2, 0.2)) < 1e-12);
  }

  TEST_CASE("residue of C at w = 3/2 approaches a finite limit as z -> 3/2") {
    Complex prev = residue_C_w32(2.0, 1.5 + 1e-2);
    double last_step = 1e300;
    for (int k = 3; k <= 5; ++k) {
      Complex cur = residue_C_w32(2.0, 1.5 + std::pow(10.0, -k));
      double step = std::abs(cur - prev);
      CHECK(step < last_step);
      last_step = step;
      prev = cur;
    }
    CHECK(std::isfinite(std::abs(residue_C_w32(2.0, 2.0))));
  }

  TEST_CASE("log-prime sums against direct sums") {
    auto ps = oracle::primes_upto(3'000'000);
    for (double r : {0.15, 0.25}) {
      double s3 = 0.0, s4 = 0.0;
      for (auto p : ps) {
        if (p == 2) continue;
        double dp = p, l = std::log(dp), q = std::pow(dp, 1.0 + 2.0 * r) - 1.0;
        s3 += l / (dp * q);
        s4 += l / ((dp + 1.0) * q);
      }
      // the omitted tails are below Σ_{p > 3·10^6} log p · p^{-2-2r} < 1e-8
      CHECK(std::abs(prime_sum_thm3(r).value - s3) < 1e-8);
      CHECK(std::abs(prime_sum_thm4(r).value - s4) < 1e-8);
      CHECK(prime_sum_thm3(r).value.real() > s3);
    }
  }

  TEST_CASE("guards and divergent parameters") {
    CHECK(code_of([] { zeta_guarded(1.0 + 1e-7); }) == Errc::pole);
    // c_p ~ p^{-1-z-w} - p^{-1-2w}: exponent 0.8 here
    CHECK(code_of([] { P_D(0.1, -0.1); }) == Errc::divergent_region);
    CHECK(std::abs(P_D(0.2, 0.3).value) > 0.0);
    CHECK(code_of([] { residue_s1_AD(0.5, 0.75); }) == Errc::pole);
  }
}
