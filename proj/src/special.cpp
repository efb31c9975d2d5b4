#include "ratios/special.hpp"

#include <array>
#include <complex>
#include <string>
#include <vector>
#include <cmath>

#include "ratios/error.hpp"

namespace ratios {

namespace {

// B_{2k}, k = 1..20
constexpr std::array<long double, 20> kBernoulli2k = {
    1.0L / 6.0L,
    -1.0L / 30.0L,
    1.0L / 42.0L,
    -1.0L / 30.0L,
    5.0L / 66.0L,
    -691.0L / 2730.0L,
    7.0L / 6.0L,
    -3617.0L / 510.0L,
    43867.0L / 798.0L,
    -174611.0L / 330.0L,
    854513.0L / 138.0L,
    -236364091.0L / 2730.0L,
    8553103.0L / 6.0L,
    -23749461029.0L / 870.0L,
    8615841276005.0L / 14322.0L,
    -7709321041217.0L / 510.0L,
    2577687858367.0L / 6.0L,
    -26315271553053477373.0L / 1919190.0L,
    2929993913841559.0L / 6.0L,
    -261082718496449122051.0L / 13530.0L,
};

// B_{2k}/(2k)!
template <class R>
const std::array<R, 20>& bernoulli_over_factorial() {
  static const std::array<R, 20> table = [] {
    std::array<R, 20> t{};
    long double fact = 1.0L;
    for (int k = 1; k <= 20; ++k) {
      fact *= (long double)(2 * k - 1) * (long double)(2 * k);
      t[k - 1] = R(kBernoulli2k[k - 1] / fact);
    }
    return t;
  }();
  return table;
}

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640561764;

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// Stirling series for log Γ, valid for |z| >= 15 away from the negative axis.
Complex lgamma_stirling(Complex z) {
  Complex sum = (z - 0.5) * std::log(z) - z + kLogSqrt2Pi;
  Complex zinv = 1.0 / z;
  Complex z2inv = zinv * zinv;
  Complex pw = zinv;
  for (int k = 1; k <= 12; ++k) {
    Complex term = double(kBernoulli2k[k - 1]) / (double(2 * k) * double(2 * k - 1)) * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pw *= z2inv;
  }
  return sum;
}

int stirling_shift(Complex s) {
  double need = 15.0;
  if (std::abs(s.imag()) >= need) return 0;
  double n = std::ceil(need - s.real());
  return n > 0 ? int(n) : 0;
}

// log Γ and the shift product for Re(s) >= 1/2.
Complex gamma_right(Complex s) {
  int n = stirling_shift(s);
  Complex prod = 1.0;
  for (int k = 0; k < n; ++k) prod *= s + double(k);
  return std::exp(lgamma_stirling(s + double(n))) / prod;
}

Complex digamma_asymptotic(Complex z) {
  Complex sum = std::log(z) - 0.5 / z;
  Complex z2inv = 1.0 / (z * z);
  Complex pw = z2inv;
  for (int k = 1; k <= 12; ++k) {
    Complex term = double(kBernoulli2k[k - 1]) / double(2 * k) * pw;
    sum -= term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pw *= z2inv;
  }
  return sum;
}

// Euler-Maclaurin for Σ_{m>=0} (m+a)^{-s}. Returns (s-1)·ζ(s,a) so the
// result is entire, and its s-derivative when requested.
struct EmResult {
  Complex scaled;        // (s-1) ζ(s,a)
  Complex value;         // ζ(s,a) (undefined at s = 1)
  Complex deriv;         // ∂_s ζ(s,a)
};

// Euler-Maclaurin in precision R. For Re(s) < 0 the head sum and N^{1-s}/(s-1) cancel,
// so that side runs in long double.
template <class R>
EmResult hurwitz_em_impl(Complex s_in, double a, bool want_deriv) {
  using C = std::complex<R>;
  const C s(R(s_in.real()), R(s_in.imag()));
  int n_terms = 10 + int(std::ceil(std::abs(s_in)));
  C head = 0.0;
  C head_d = 0.0;
  for (int m = 0; m < n_terms; ++m) {
    R x = R(m) + R(a);
    R lx = std::log(x);
    C p = std::exp(-s * lx);
    head += p;
    if (want_deriv) head_d -= lx * p;
  }
  R big_n = R(n_terms) + R(a);
  R ln = std::log(big_n);
  C n_pow = std::exp(-s * ln);  // N^{-s}
  C tail = R(0.5) * n_pow;
  C tail_d = want_deriv ? -R(0.5) * ln * n_pow : C(0.0);

  const auto& bf = bernoulli_over_factorial<R>();
  C poly = s;  // s(s+1)...(s+2k-2)
  C poly_d = 1.0;
  C npow = n_pow / big_n;  // N^{-s-1}
  R ninv2 = R(1) / (big_n * big_n);
  for (int k = 1; k <= 20; ++k) {
    C term = bf[k - 1] * poly * npow;
    tail += term;
    if (want_deriv) tail_d += bf[k - 1] * (poly_d - ln * poly) * npow;
    if (std::abs(term) < R(1e-21) * (std::abs(head) + std::abs(tail))) break;
    // advance poly by two factors: (s+2k-1)(s+2k)
    C f1 = s + R(2 * k - 1);
    C f2 = s + R(2 * k);
    poly_d = poly_d * f1 + poly;
    poly = poly * f1;
    poly_d = poly_d * f2 + poly;
    poly = poly * f2;
    npow *= ninv2;
  }
  C s1 = s - R(1);
  C n1 = n_pow * big_n;  // N^{1-s}
  auto out = [](C z) { return Complex(double(z.real()), double(z.imag())); };
  EmResult r;
  r.scaled = out(s1 * (head + tail) + n1);
  if (s1 != C(0.0)) r.value = out(head + tail + n1 / s1);
  if (want_deriv && s1 != C(0.0)) {
    r.deriv = out(head_d + tail_d + n1 * (-ln / s1 - R(1) / (s1 * s1)));
  }
  return r;
}

EmResult hurwitz_em(Complex s, double a, bool want_deriv) {
  if (s.real() < 0.0) return hurwitz_em_impl<long double>(s, a, want_deriv);
  return hurwitz_em_impl<double>(s, a, want_deriv);
}

void require_not_one(Complex s, const char* what) {
  if (s == Complex(1.0, 0.0)) throw Error(Errc::pole, std::string(what) + " at s = 1");
}

std::vector<std::uint64_t> small_prime_divisors(std::uint64_t k) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      ps.push_back(p);
      while (k % p == 0) k /= p;
    }
  }
  if (k > 1) ps.push_back(k);
  return ps;
}

}  // namespace

Complex gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw Error(Errc::pole, "gamma at non-positive integer");
  if (s.real() < 0.5) {
    return kPi / (std::sin(kPi * s) * gamma_right(1.0 - s));
  }
  return gamma_right(s);
}

Complex rgamma(Complex s) {
  if (is_nonpositive_integer(s)) return 0.0;
  if (s.real() < 0.5) return std::sin(kPi * s) * gamma_right(1.0 - s) / kPi;
  return 1.0 / gamma_right(s);
}

Complex lgamma(Complex s) {
  if (is_nonpositive_integer(s)) throw Error(Errc::pole, "lgamma at non-positive integer");
  if (s.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * s)) - lgamma(1.0 - s);
  }
  int n = stirling_shift(s);
  Complex acc = lgamma_stirling(s + double(n));
  for (int k = 0; k < n; ++k) acc -= std::log(s + double(k));
  return acc;
}

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s)) throw Error(Errc::pole, "digamma at non-positive integer");
  if (s.real() < 0.5) {
    return digamma(1.0 - s) - kPi / std::tan(kPi * s);
  }
  int n = stirling_shift(s);
  Complex acc = digamma_asymptotic(s + double(n));
  for (int k = 0; k < n; ++k) acc -= 1.0 / (s + double(k));
  return acc;
}

Complex gamma_e(Complex s) { return gamma((1.0 - s) / 2.0) * rgamma(s / 2.0); }

Complex gamma_o(Complex s) { return gamma((2.0 - s) / 2.0) * rgamma((s + 1.0) / 2.0); }

Complex go_plus_ge(Complex s) {
  return std::pow(Complex(2.0), s + 0.5) * gamma(1.0 - s) * std::cos(kPi * s / 2.0 - kPi / 4.0) /
         std::sqrt(kPi);
}

Complex zeta(Complex s) {
  require_not_one(s, "zeta");
  if (s.real() < 0.0) {
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    return std::pow(Complex(2.0), s) * std::pow(Complex(kPi), s - 1.0) * std::sin(kPi * s / 2.0) *
           gamma(1.0 - s) * zeta(1.0 - s);
  }
  return hurwitz_em(s, 1.0, false).value;
}

Complex zeta_deriv(Complex s) {
  require_not_one(s, "zeta_deriv");
  return hurwitz_em(s, 1.0, true).deriv;
}

Complex reciprocal_zeta(Complex s) {
  if (s.real() < 0.0) return 1.0 / zeta(s);
  Complex scaled = hurwitz_em(s, 1.0, false).scaled;
  return (s - 1.0) / scaled;
}

Complex zeta_removed(Complex s, std::uint64_t k) {
  Complex z = zeta(s);
  for (auto p : small_prime_divisors(k)) z *= 1.0 - std::pow(double(p), -s);
  return z;
}

Complex reciprocal_zeta_removed(Complex s, std::uint64_t k) {
  Complex z = reciprocal_zeta(s);
  for (auto p : small_prime_divisors(k)) z /= 1.0 - std::pow(double(p), -s);
  return z;
}

Complex hurwitz_zeta(Complex s, double a) {
  require_not_one(s, "hurwitz_zeta");
  return hurwitz_em(s, a, false).value;
}

Complex hurwitz_zeta_deriv(Complex s, double a) {
  require_not_one(s, "hurwitz_zeta_deriv");
  return hurwitz_em(s, a, true).deriv;
}

HurwitzPair hurwitz_zeta_with_deriv(Complex s, double a) {
  require_not_one(s, "hurwitz_zeta");
  auto r = hurwitz_em(s, a, true);
  return {r.value, r.deriv};
}

double weight_value(const WeightSpec& spec, double x) {
  switch (spec.kind) {
    case WeightKind::exponential: return std::exp(-x);
  }
  return 0.0;
}

Complex mellin_weight(const WeightSpec& spec, Complex s) {
  switch (spec.kind) {
    case WeightKind::exponential:
      if (s.real() <= 0.0) throw Error(Errc::out_of_strip, "Mellin transform needs Re(s) > 0");
      return gamma(s);
  }
  return 0.0;
}

}  // namespace ratios
