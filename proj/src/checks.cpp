#include "ratios/checks.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "ratios/character.hpp"
#include "ratios/gauss.hpp"
#include "ratios/lfunc.hpp"
#include "ratios/special.hpp"
#include "ratios/summation.hpp"

namespace ratios {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_point(Complex s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+gi", s.real(), s.imag());
  return buf;
}

void record(CheckResult& r, double residual, const std::string& where) {
  if (residual > r.worst || std::isnan(residual)) {
    r.worst = std::isnan(residual) ? INFINITY : residual;
    r.detail = where;
  }
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Σ over k squarefree, j >= 1 with (kj)^2 <= bound of μ(k) (k j^2)^{-w} k^{-z} g(kj),
// the pairs (m, k) = (k j^2, k) being exactly those with mk a square.
template <class Weight>
Complex square_indexed_sum(Complex w, Complex z, std::uint64_t bound, bool odd_only, const FactorSieve& sieve,
                           Weight g) {
  auto root = std::uint64_t(std::floor(std::sqrt(double(bound))));
  sieve.require(root);
  ComplexNeumaierSum acc;
  for (std::uint64_t k = 1; k <= root; ++k) {
    if (odd_only && k % 2 == 0) continue;
    int mu = sieve.mobius(k);
    if (mu == 0) continue;
    double lk = std::log(double(k));
    Complex head = double(mu) * std::exp(-(w + z) * lk);
    for (std::uint64_t j = 1; k * j <= root; ++j) {
      if (odd_only && j % 2 == 0) continue;
      acc.add(head * std::exp(-2.0 * w * std::log(double(j))) * g(k * j));
    }
  }
  return acc.value();
}

}  // namespace

CheckResult check_gauss(std::uint64_t n_max, std::int64_t q_max, const FactorSieve& sieve, CheckOptions opt) {
  auto t0 = Clock::now();
  CheckResult r{"gauss", 0.0, 1e-9, 0.0, ""};
  const Complex minus_i(0.0, -1.0);
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    DirichletChar chi = jacobi_char(n);
    for (std::int64_t q = 0; q <= q_max; ++q) {
      Complex brute = tau_bruteforce(chi, q);
      if (n % 4 == 3) brute *= minus_i;
      brute *= 1.0 + opt.corruption;
      record(r, std::abs(G_quadratic(n, q, sieve) - brute),
             "n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_funceq(std::uint64_t n_max, const std::vector<Complex>& points, const FactorSieve& sieve,
                         CheckOptions opt) {
  auto t0 = Clock::now();
  CheckResult r{"funceq", 0.0, 1e-8, 0.0, ""};
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    for (Complex s : points) {
      auto sides = funceq_gauss_sides(s, n, sieve);
      record(r, std::abs(sides.lhs - sides.rhs * (1.0 + opt.corruption)),
             "n=" + std::to_string(n) + " s=" + fmt_point(s));
    }
  }
  r.seconds = since(t0);
  return r;
}

CheckResult check_discriminant_series(std::uint64_t d_max, const FactorSieve& sieve, CheckOptions opt) {
  auto t0 = Clock::now();
  CheckResult r{"lemma24", 0.0, 1e-6, 0.0, ""};
  const std::pair<const char*, DirichletChar> chars[] = {
      {"chi_3", jacobi_char(3)}, {"chi_5", jacobi_char(5)}, {"trivial", jacobi_char(1)}};
  for (const auto& [label, chi] : chars) {
    Complex partial = l_D_partial(2.0, chi, d_max, sieve);
    Complex closed = l_D_closed(2.0, chi) * (1.0 + opt.corruption);
    record(r, std::abs(partial - closed), label);
  }
  r.seconds = since(t0);
  return r;
}

std::vector<CheckResult> check_gamma(CheckOptions opt) {
  auto t0 = Clock::now();
  const double c = 1.0 + opt.corruption;
  const double sqrt_pi = std::sqrt(kPi);
  // 20 points with -2 < Re s < 1 kept off the real axis, so no Γ pole is near
  std::vector<Complex> grid;
  for (int k = 0; k < 20; ++k) grid.emplace_back(-1.9 + 0.145 * k, 0.25 + 0.1 * (k % 5));
  std::mt19937_64 rng(20261019);
  std::uniform_real_distribution<double> re(-2.0, 1.0), im(-3.0, 3.0);
  std::vector<Complex> random_pts;
  while (random_pts.size() < 20) {
    Complex s(re(rng), im(rng));
    if (std::abs(s.imag()) < 0.05) continue;
    random_pts.push_back(s);
  }

  CheckResult dup{"gamma.duplication", 0.0, 1e-10, 0.0, ""};
  CheckResult refl{"gamma.reflection", 0.0, 1e-10, 0.0, ""};
  CheckResult sinf{"gamma.sin_form", 0.0, 1e-10, 0.0, ""};
  CheckResult lem{"gamma.even_plus_odd", 0.0, 1e-10, 0.0, ""};
  for (Complex s : grid) {
    Complex lhs = gamma(s) * gamma(s + 0.5);
    Complex rhs = std::pow(Complex(2.0), 1.0 - 2.0 * s) * sqrt_pi * gamma(2.0 * s) * c;
    record(dup, rel(lhs, rhs), "s=" + fmt_point(s));
    record(refl, rel(gamma(1.0 - s) * gamma(s), kPi / std::sin(kPi * s) * c), "s=" + fmt_point(s));
    Complex sin_form = std::pow(Complex(2.0), s) * std::sin(kPi * s / 2.0) * gamma(1.0 - s) / sqrt_pi * c;
    record(sinf, rel(gamma_e(s), sin_form), "s=" + fmt_point(s));
  }
  for (Complex s : random_pts) record(lem, rel(go_plus_ge(s), (gamma_e(s) + gamma_o(s)) * c), "s=" + fmt_point(s));
  double secs = since(t0);
  std::vector<CheckResult> out{dup, refl, sinf, lem};
  for (auto& r : out) r.seconds = secs / 4.0;
  return out;
}

CheckResult check_theta(std::uint64_t n_max, const std::vector<double>& ys, const FactorSieve& sieve,
                        CheckOptions opt) {
  auto t0 = Clock::now();
  CheckResult r{"theta", 0.0, 1e-10, 0.0, ""};
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    for (double y : ys) {
      auto sides = theta_funceq_sides(n, y, sieve);
      char buf[64];
      std::snprintf(buf, sizeof buf, "n=%llu y=%g", static_cast<unsigned long long>(n), y);
      record(r, std::abs(sides.lhs - sides.rhs * (1.0 + opt.corruption)), buf);
    }
  }
  r.seconds = since(t0);
  return r;
}

Complex residue_s1_AD_bruteforce(Complex w, Complex z, std::uint64_t bound, const FactorSieve& sieve) {
  auto g = [&](std::uint64_t n) {
    double v = 1.0;
    for (const auto& pp : sieve.factor(n).pairs) v *= double(pp.prime) / double(pp.prime + 1);
    return v;
  };
  return square_indexed_sum(w, z, bound, false, sieve, g) / (2.0 * zeta(2.0));
}

Complex residue_s1_A_bruteforce(Complex alpha, Complex beta, std::uint64_t bound, const FactorSieve& sieve) {
  auto a = [&](std::uint64_t n) {
    double v = 1.0;
    for (const auto& pp : sieve.factor(n).pairs) v *= 1.0 - 1.0 / double(pp.prime);
    return v;
  };
  return 0.5 * square_indexed_sum(0.5 + alpha, 0.5 + beta, bound, true, sieve, a);
}

std::vector<CheckResult> check_euler(std::uint64_t bound, const FactorSieve& sieve, const EulerSpec& spec,
                                     CheckOptions opt) {
  const double c = 1.0 + opt.corruption;
  std::vector<CheckResult> out;

  auto t0 = Clock::now();
  CheckResult p32{"euler.P(3/2)", 0.0, 1e-10, 0.0, "z=3/2"};
  p32.worst = std::abs(P_big(1.5, spec).value - zeta(2.0) * c);
  p32.seconds = since(t0);
  out.push_back(p32);

  t0 = Clock::now();
  CheckResult pd2{"euler.P_D2", 0.0, 1e-8, 0.0, ""};
  for (double r : {0.05, 0.1, 0.2}) {
    Complex lhs = P_D2(-r, r, spec).value / (3.0 * zeta(2.0));
    Complex rhs = 1.0 / (4.0 * zeta_removed(2.0 - 2.0 * r, 2)) * c;
    record(pd2, std::abs(lhs - rhs), "r=" + std::to_string(r));
  }
  pd2.seconds = since(t0);
  out.push_back(pd2);

  t0 = Clock::now();
  CheckResult rad{"euler.residue_AD", 0.0, 1e-6, 0.0, ""};
  for (auto [w, z] : {std::pair<Complex, Complex>{1.5, 1.3}, {Complex(1.2, 0.5), 1.4}}) {
    Complex closed = residue_s1_AD(w, z, spec) * c;
    record(rad, std::abs(residue_s1_AD_bruteforce(w, z, bound, sieve) - closed),
           "w=" + fmt_point(w) + " z=" + fmt_point(z));
  }
  rad.seconds = since(t0);
  out.push_back(rad);

  t0 = Clock::now();
  CheckResult ra{"euler.residue_A", 0.0, 1e-6, 0.0, ""};
  for (auto [a, b] : {std::pair<Complex, Complex>{1.0, 0.8}, {Complex(0.7, 0.5), 0.9}}) {
    Complex closed = residue_s1_A(a, b, spec) * c;
    record(ra, std::abs(residue_s1_A_bruteforce(a, b, bound, sieve) - closed),
           "alpha=" + fmt_point(a) + " beta=" + fmt_point(b));
  }
  ra.seconds = since(t0);
  out.push_back(ra);
  return out;
}

}  // namespace ratios
