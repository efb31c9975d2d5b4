#include "ratios/mds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "ratios/character.hpp"
#include "ratios/error.hpp"
#include "ratios/eulerprod.hpp"
#include "ratios/gauss.hpp"
#include "ratios/special.hpp"
#include "ratios/summation.hpp"

namespace ratios {

namespace {

using Check = std::function<bool(double s, double w, double z)>;

const std::vector<std::pair<std::string, Check>>& region_table() {
  static const std::vector<std::pair<std::string, Check>> table = {
      {"R0", [](double s, double w, double z) { return s > 1 && s + w > 1.5 && z > 0.5; }},
      {"R1",
       [](double s, double w, double z) {
         return s > 0.25 && w > 1 && z > 1 && s + w > 1.5 && s + z > 1.5;
       }},
      {"R2",
       [](double s, double w, double z) { return s > 0.25 && z > 0.5 && s + w > 1.5 && s + z > 1.5; }},
      {"R3",
       [](double s, double w, double z) { return s + w > 0.75 && z > 0.5 && s > 1 && s + w + z > 2; }},
      {"R4",
       [](double s, double w, double z) {
         return s > 0.25 && z > 0.5 && s + w > 0.75 && 2 * s + w > 1.75 && s + z > 1.5 &&
                2 * s + w + z > 3 && s + w + z > 2;
       }},
      {"S0", [](double s, double w, double z) { return s > 1 && s + w > 1.5 && z > 0.5; }},
      {"S1",
       [](double s, double w, double z) { return w > 1 && z > 1 && s + w > 1.5 && s + z > 1.5; }},
      {"S2", [](double s, double w, double z) { return z > 0.5 && s + w > 1.5 && s + z > 1.5; }},
      {"S3",
       [](double s, double w, double z) {
         return s + w > 1 && s + z > 1 && (1 - s) + std::min(0.0, z - w) > 1;
       }},
      {"S4",
       [](double s, double w, double z) {
         return s + 2 * w > 2 && s + 2 * z > 2 && s + z > 1 && s + w > 1 && z > 0.5;
       }},
      {"P", [](double s, double w, double z) { return s + z > 1.5 && w > 1.5 && z > 1.5; }},
  };
  return table;
}

Complex npow(double n, Complex e) { return std::exp(-e * std::log(n)); }

// Kronecker (d/n) as a function of d, tabulated over one period.
DirichletChar bottom_kronecker_char(std::uint64_t n) {
  std::uint64_t odd = n;
  while (odd % 2 == 0) odd /= 2;
  std::uint64_t mod = (n % 2 == 0) ? odd * 8 : odd;
  DirichletChar c;
  c.modulus = mod;
  c.values.resize(mod);
  for (std::uint64_t d = 0; d < mod; ++d) c.values[d] = std::int8_t(kronecker(std::int64_t(d), std::int64_t(n)));
  return c;
}

}  // namespace

std::vector<std::string> region_classify(Complex s, Complex w, Complex z) {
  std::vector<std::string> out;
  for (const auto& [label, check] : region_table()) {
    if (check(s.real(), w.real(), z.real())) out.push_back(label);
  }
  return out;
}

bool in_region(const std::string& label, Complex s, Complex w, Complex z) {
  for (const auto& [name, check] : region_table()) {
    if (name == label) return check(s.real(), w.real(), z.real());
  }
  throw Error(Errc::usage, "unknown region label " + label);
}

Complex A_D_partial(Complex s, Complex w, Complex z, std::uint64_t d_max, const FactorSieve& sieve,
                    LEvalConfig cfg) {
  QuadraticLEvaluator eval({w, z}, std::max<std::uint64_t>(d_max, 1), cfg);
  ComplexNeumaierSum acc;
  LValue v[2];
  if (d_max >= 1) {
    eval.eval(1, v);
    acc.add(v[0].value / v[1].value);
  }
  for (const auto& fd : enumerate_fundamental_discriminants(d_max, sieve)) {
    eval.eval(std::int64_t(fd.d), v);
    if (std::abs(v[1].value) < 1e-12) {
      throw Error(Errc::zero_detected, "L(z, χ_d) vanishes at d = " + std::to_string(fd.d));
    }
    acc.add(v[0].value / v[1].value * npow(double(fd.d), s));
  }
  return acc.value();
}

Complex A_partial(Complex s, Complex w, Complex z, std::uint64_t n_max, const FactorSieve& sieve,
                  LEvalConfig cfg) {
  sieve.require(n_max);
  QuadraticLEvaluator eval({w, z}, std::max<std::uint64_t>(n_max, 1), cfg);
  ComplexNeumaierSum acc;
  LValue v[2];
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    auto k = sieve.squarefree_kernel(n);
    std::int64_t d = signed_discriminant_of_odd(k.n0);
    eval.eval(d, v);
    Complex num = v[0].value;
    Complex den = v[1].value;
    auto fix = [&](std::uint64_t p) {
      int c = kronecker(d, std::int64_t(p));
      num *= 1.0 - double(c) * npow(double(p), w);
      den *= 1.0 - double(c) * npow(double(p), z);
    };
    fix(2);
    for (const auto& pp : sieve.factor(k.n1).pairs) fix(pp.prime);
    if (std::abs(den) < 1e-12) {
      throw Error(Errc::zero_detected, "L_(2)(z, χ_n) vanishes at n = " + std::to_string(n));
    }
    acc.add(num / den * npow(double(n), s));
  }
  return acc.value();
}

Complex A_D_double_loop(Complex s, Complex w, Complex z, std::uint64_t d_max, std::uint64_t mk_max,
                        const FactorSieve& sieve) {
  sieve.require(mk_max);
  std::vector<Complex> mw(mk_max + 1), kz(mk_max + 1);
  for (std::uint64_t m = 1; m <= mk_max; ++m) {
    mw[m] = npow(double(m), w);
    kz[m] = double(sieve.mobius(m)) * npow(double(m), z);
  }
  LegendreTable legendre{std::uint32_t(mk_max)};
  std::vector<std::int8_t> chi(mk_max + 1);
  std::vector<std::uint64_t> ds{1};
  for (const auto& fd : enumerate_fundamental_discriminants(d_max, sieve)) ds.push_back(fd.d);
  ComplexNeumaierSum acc;
  for (std::uint64_t d : ds) {
    legendre.fill_kronecker(std::int64_t(d), chi);
    Complex lw = 0.0, linv = 0.0;
    for (std::uint64_t m = 1; m <= mk_max; ++m) {
      if (chi[m] == 0) continue;
      lw += double(chi[m]) * mw[m];
      linv += double(chi[m]) * kz[m];
    }
    acc.add(npow(double(d), s) * lw * linv);
  }
  return acc.value();
}

Complex A_exchanged(Complex s, Complex w, Complex z, std::uint64_t n_max, std::uint64_t mk_max,
                    const FactorSieve& sieve) {
  sieve.require(mk_max);
  std::vector<Complex> mw(mk_max + 1), kz(mk_max + 1);
  for (std::uint64_t m = 1; m <= mk_max; m += 2) {
    mw[m] = npow(double(m), w);
    kz[m] = double(sieve.mobius(m)) * npow(double(m), z);
  }
  ComplexNeumaierSum acc;
  for (std::uint64_t n = 1; n <= n_max; n += 2) {
    Complex lw = 0.0, linv = 0.0;
    for (std::uint64_t m = 1; m <= mk_max; m += 2) {
      int c = jacobi(std::int64_t(m), n);
      if (c == 0) continue;
      lw += double(c) * mw[m];
      linv += double(c) * kz[m];
    }
    acc.add(npow(double(n), s) * lw * linv);
  }
  return acc.value();
}

Complex A_D_exchanged(Complex s, Complex w, Complex z, std::uint64_t t_max, const FactorSieve& sieve) {
  std::map<std::uint64_t, Complex> l_cache;
  ComplexNeumaierSum acc;
  for (std::uint64_t k = 1; k <= t_max; ++k) {
    int mu = sieve.mobius(k);
    if (mu == 0) continue;
    for (std::uint64_t m = 1; m <= t_max; ++m) {
      std::uint64_t n = m * k;
      auto it = l_cache.find(n);
      if (it == l_cache.end()) it = l_cache.emplace(n, l_D_closed(s, bottom_kronecker_char(n))).first;
      acc.add(double(mu) * npow(double(m), w) * npow(double(k), z) * it->second);
    }
  }
  return acc.value();
}

Complex A_D_residue_extrapolated(Complex w, Complex z, std::uint64_t t_max, const FactorSieve& sieve) {
  auto g = [&](double delta) { return delta * A_D_exchanged(1.0 + delta, w, z, t_max, sieve); };
  return (8.0 * g(0.01) - 6.0 * g(0.02) + g(0.04)) / 3.0;
}

Complex C_partial(Complex s, Complex w, Complex z, std::uint64_t q_max, std::uint64_t l_max,
                  const FactorSieve& sieve) {
  ComplexNeumaierSum acc;
  for (std::uint64_t l = 1; l <= l_max; l += 2) {
    Complex lw = sieve.a_t(l, z - w) * npow(double(l), w);
    for (std::uint64_t q = 1; q <= q_max; ++q) {
      Complex t = tau_4l(l, std::int64_t(q), sieve);
      if (t == Complex(0.0)) continue;
      acc.add(t * lw * npow(double(q), s));
    }
  }
  return acc.value();
}

Complex C_twisted_partial(Complex s, Complex w, Complex z, int psi, int psi_prime, std::uint64_t q_max,
                          std::uint64_t l_max, const FactorSieve& sieve) {
  ComplexNeumaierSum acc;
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    int c = psi8(psi, std::int64_t(l));
    if (c == 0) continue;
    Complex lw = double(c) * sieve.a_t(l, z - w) * npow(double(l), w);
    for (std::uint64_t q = 1; q <= q_max; ++q) {
      int cq = psi8(psi_prime, std::int64_t(q));
      if (cq == 0) continue;
      Complex g = G_quadratic(l, std::int64_t(q), sieve);
      if (g == Complex(0.0)) continue;
      acc.add(double(cq) * g * lw * npow(double(q), s));
    }
  }
  return acc.value();
}

Complex C_from_twists(Complex s, Complex w, Complex z, std::uint64_t q_max, std::uint64_t l_max,
                      const FactorSieve& sieve) {
  auto C = [&](int a, int b, std::uint64_t qm) { return C_twisted_partial(s, w, z, a, b, qm, l_max, sieve); };
  Complex two = 2.0, four = 4.0;
  return -std::pow(two, -s) * (C(2, 1, q_max / 2) + C(-2, 1, q_max / 2)) +
         std::pow(four, -s) * (C(1, 0, q_max / 4) + C(-1, 0, q_max / 4)) + C(1, -1, q_max) -
         C(-1, -1, q_max);
}

Complex D_direct(Complex w, Complex t, std::uint64_t q, int psi, std::uint64_t l_max,
                 const FactorSieve& sieve) {
  sieve.require(l_max);
  ComplexNeumaierSum acc;
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    int c = psi8(psi, std::int64_t(l));
    if (c == 0) continue;
    Complex g = G_quadratic(l, std::int64_t(q), sieve);
    if (g == Complex(0.0)) continue;
    acc.add(double(c) * g * sieve.a_t(l, t) * npow(double(l), w));
  }
  return acc.value();
}

Complex D_factored(Complex w, Complex t, std::uint64_t q, int psi, const FactorSieve& sieve) {
  if (psi8(psi, 2) != 0) throw Error(Errc::usage, "D(w, t, q; ψ) needs ψ(2) = 0");
  DirichletChar twisted = char_product(kronecker_char(4 * std::int64_t(q)), psi8_char(psi));
  Complex l = l_hurwitz_table(w - 0.5, twisted).value;
  Complex zr = zeta_removed(2.0 * w - 1.0, 4 * q);

  ComplexNeumaierSum log_e;
  for (std::uint32_t p : primes_upto(1'000'000)) {
    if (p == 2) continue;
    int x = kronecker(4 * std::int64_t(q), p) * psi8(psi, p);
    if (x == 0) continue;
    double lp = std::log(double(p));
    Complex f = 1.0 - double(x) * std::exp(-(t + w - 0.5) * lp) / (1.0 + double(x) * std::exp((0.5 - w) * lp));
    log_e.add(std::log(f));
  }
  Complex e = std::exp(log_e.value());

  Complex pq = 1.0;
  for (const auto& pp : sieve.factor(q).pairs) {
    std::uint64_t p = pp.prime;
    if (p == 2) continue;
    Complex local = 1.0;
    Complex at = 1.0 - npow(double(p), t);
    int cp = psi8(psi, std::int64_t(p));
    int ck = 1;
    for (std::uint32_t k = 1; k <= pp.exponent + 1; ++k) {
      ck *= cp;
      local += G_prime_power(p, k, std::int64_t(q)) * double(ck) * at * npow(double(p), double(k) * w);
    }
    pq *= local;
  }
  return l / zr * e * pq;
}

double funceq_s_termwise(Complex s, std::uint64_t m, std::uint64_t k, const FactorSieve& sieve) {
  std::uint64_t mk = m * k;
  std::uint64_t n = 4 * mk;
  if (n > kHurwitzMaxModulus) throw Error(Errc::modulus_too_large, "4mk must be <= 10^4");
  Complex lhs = l_hurwitz_table(s, kronecker_char(std::int64_t(n))).value;
  std::vector<Complex> tau(n);
  for (std::uint64_t r = 0; r < n; ++r) tau[r] = tau_4l(mk, std::int64_t(r), sieve);
  Complex pre = std::pow(Complex(kPi), s - 0.5) * gamma((1.0 - s) / 2.0) /
                (std::pow(Complex(4.0), s) * gamma(s / 2.0));
  Complex rhs = pre * npow(double(mk), s) * k_series_from_tau(1.0 - s, tau);
  return std::abs(lhs - rhs);
}

double funceq_w_check(Complex s, Complex w, Complex z, std::uint64_t d_max, const FactorSieve& sieve) {
  Complex lhs = A_D_partial(s, w, z, d_max, sieve);
  Complex rhs = std::pow(Complex(kPi), w - 0.5) * gamma_e(w) * A_D_partial(s + w - 0.5, 1.0 - w, z, d_max, sieve);
  return std::abs(lhs - rhs);
}

}  // namespace ratios
