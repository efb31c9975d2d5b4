#include "ratios/eulerprod.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>

#include "ratios/error.hpp"
#include "ratios/special.hpp"
#include "ratios/summation.hpp"

namespace ratios {

namespace {

constexpr double kMergeTol = 1e-13;
constexpr double kTailStop = 1e-17;

// exp(x) - 1 without cancellation for small x
Complex cexpm1(Complex x) {
  double s = std::sin(0.5 * x.imag());
  double re = std::expm1(x.real()) * std::cos(x.imag()) - 2.0 * s * s;
  double im = std::exp(x.real()) * std::sin(x.imag());
  return {re, im};
}

// log(1 + c) without cancellation for small c
Complex clog1p(Complex c) {
  double re = 0.5 * std::log1p(2.0 * c.real() + std::norm(c));
  double im = std::atan2(c.imag(), 1.0 + c.real());
  return {re, im};
}

// p^{-e}
Complex ppow(double logp, Complex e) { return std::exp(-e * logp); }

int small_mobius(int k) {
  int mu = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

PSeries mono(Complex c, Complex e) { return PSeries::monomial(c, e); }
PSeries one() { return PSeries::constant(1.0); }

// 1/(p+1) = p^{-1}/(1 + p^{-1})
PSeries inv_p_plus_1() { return mono(1.0, 1.0) * PSeries::geometric(mono(-1.0, 1.0)); }
// 1/(p^a - 1) = p^{-a}/(1 - p^{-a})
PSeries inv_pow_minus_1(Complex a) { return mono(1.0, a) * PSeries::geometric(mono(1.0, a)); }

// Memo for the truncated prime-zeta pieces; keyed by exact argument bits.
struct TailKey {
  double re, im;
  std::uint32_t cutoff;
  int kind;
  bool operator<(const TailKey& o) const {
    return std::tie(re, im, cutoff, kind) < std::tie(o.re, o.im, o.cutoff, o.kind);
  }
};

std::mutex& tail_mutex() {
  static std::mutex m;
  return m;
}
std::map<TailKey, Complex>& tail_memo() {
  static std::map<TailKey, Complex> m;
  return m;
}

// T(s) = Σ_{p>P} -log(1 - p^{-s}) (kind 0) or its s-derivative (kind 1)
Complex partial_log_zeta(Complex s, std::uint32_t cutoff, int kind) {
  TailKey key{s.real(), s.imag(), cutoff, kind};
  {
    std::lock_guard<std::mutex> lock(tail_mutex());
    auto it = tail_memo().find(key);
    if (it != tail_memo().end()) return it->second;
  }
  ComplexNeumaierSum acc;
  if (kind == 0) {
    acc.add(std::log(zeta(s)));
    for (std::uint32_t p : primes_upto(cutoff)) acc.add(clog1p(-ppow(std::log(double(p)), s)));
  } else {
    acc.add(zeta_deriv(s) / zeta(s));
    for (std::uint32_t p : primes_upto(cutoff)) {
      double lp = std::log(double(p));
      Complex x = ppow(lp, s);
      acc.add(lp * x / (1.0 - x));
    }
  }
  Complex v = acc.value();
  if (kind == 0) {
    // log ζ and the summed logs may sit on different branches
    double turns = std::round(v.imag() / (2.0 * kPi));
    v -= Complex(0.0, 2.0 * kPi * turns);
  }
  std::lock_guard<std::mutex> lock(tail_mutex());
  tail_memo().emplace(key, v);
  return v;
}

void require_convergent(Complex e) {
  if (e.real() <= 1.0) {
    throw Error(Errc::divergent_region,
                "Euler product tail has exponent with real part " + std::to_string(e.real()));
  }
}

}  // namespace

std::span<const std::uint32_t> primes_upto(std::uint32_t limit) {
  static std::mutex m;
  static std::map<std::uint32_t, std::unique_ptr<std::vector<std::uint32_t>>> tables;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = tables[limit];
  if (!slot) {
    std::vector<bool> composite(std::size_t(limit) + 1, false);
    auto out = std::make_unique<std::vector<std::uint32_t>>();
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out->push_back(std::uint32_t(i));
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    slot = std::move(out);
  }
  return *slot;
}

PSeries PSeries::constant(Complex c) { return monomial(c, 0.0); }

PSeries PSeries::monomial(Complex c, Complex e) {
  PSeries s;
  s.push(c, e);
  return s;
}

void PSeries::push(Complex c, Complex e) {
  if (c == Complex(0.0) || e.real() > kWorkMax) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (std::abs(it->expo - e) < kMergeTol) {
      it->coef += c;
      if (std::abs(it->coef) < 1e-300) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({c, e});
}

PSeries PSeries::operator+(const PSeries& o) const {
  PSeries r = *this;
  for (const auto& t : o.terms_) r.push(t.coef, t.expo);
  return r;
}

PSeries PSeries::operator-(const PSeries& o) const { return *this + o.scaled(-1.0); }

PSeries PSeries::operator*(const PSeries& o) const {
  PSeries r;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) r.push(a.coef * b.coef, a.expo + b.expo);
  }
  return r;
}

PSeries PSeries::scaled(Complex c) const {
  PSeries r;
  for (const auto& t : terms_) r.push(c * t.coef, t.expo);
  return r;
}

PSeries PSeries::geometric(const PSeries& x) {
  for (const auto& t : x.terms_) {
    if (t.expo.real() <= 0.0) throw Error(Errc::divergent_region, "geometric expansion needs Re e > 0");
  }
  PSeries result = one();
  PSeries power = one();
  while (true) {
    power = power * x;
    if (power.terms_.empty()) break;
    result = result + power;
  }
  return result;
}

PSeries PSeries::log1p(const PSeries& x) {
  for (const auto& t : x.terms_) {
    if (t.expo.real() <= 0.0) throw Error(Errc::divergent_region, "log expansion needs Re e > 0");
  }
  PSeries result;
  PSeries power = one();
  for (int k = 1;; ++k) {
    power = power * x;
    if (power.terms_.empty()) break;
    result = result + power.scaled((k % 2 == 1 ? 1.0 : -1.0) / double(k));
  }
  return result;
}

Complex PSeries::eval(double p) const {
  double lp = std::log(p);
  Complex acc = 0.0;
  for (const auto& t : terms_) acc += t.coef * ppow(lp, t.expo);
  return acc;
}

Complex prime_zeta_tail(Complex e, std::uint32_t cutoff) {
  require_convergent(e);
  double lp = std::log(double(cutoff));
  Complex acc = 0.0;
  for (int k = 1;; ++k) {
    if (std::exp(lp * (1.0 - k * e.real())) < kTailStop) break;
    int mu = small_mobius(k);
    if (mu == 0) continue;
    acc += double(mu) / double(k) * partial_log_zeta(double(k) * e, cutoff, 0);
  }
  return acc;
}

Complex prime_zeta_log_tail(Complex e, std::uint32_t cutoff) {
  require_convergent(e);
  double lp = std::log(double(cutoff));
  Complex acc = 0.0;
  for (int k = 1;; ++k) {
    if (lp * std::exp(lp * (1.0 - k * e.real())) < kTailStop) break;
    int mu = small_mobius(k);
    if (mu == 0) continue;
    acc -= double(mu) * partial_log_zeta(double(k) * e, cutoff, 1);
  }
  return acc;
}

EulerValue euler_log(const EulerFactor& f, const EulerSpec& spec) {
  ComplexNeumaierSum head;
  for (std::uint32_t p : primes_upto(spec.prime_cutoff)) {
    if (p < f.p_min) continue;
    head.add(clog1p(f.exact(double(p))));
  }
  PSeries logs = PSeries::log1p(f.series);
  Complex tail = 0.0;
  double dropped = 0.0;
  double lp = std::log(double(spec.prime_cutoff));
  for (const auto& t : logs.terms()) {
    require_convergent(t.expo);
    if (t.expo.real() > PSeries::kFinalMax) {
      dropped += std::abs(t.coef) * std::exp(lp * (1.0 - t.expo.real())) / (t.expo.real() - 1.0);
      continue;
    }
    tail += t.coef * prime_zeta_tail(t.expo, spec.prime_cutoff);
  }
  Complex h = head.value();
  EulerValue out;
  out.value = h + tail;
  out.err_est = dropped + 1e-14 * (1.0 + std::abs(h));
  return out;
}

EulerValue euler_product(const EulerFactor& f, const EulerSpec& spec) {
  EulerValue lg = euler_log(f, spec);
  EulerValue out;
  out.value = std::exp(lg.value);
  out.err_est = std::abs(out.value) * std::expm1(lg.err_est);
  return out;
}

EulerValue prime_log_sum(const EulerFactor& f, const EulerSpec& spec) {
  NeumaierSum re, im;
  for (std::uint32_t p : primes_upto(spec.prime_cutoff)) {
    if (p < f.p_min) continue;
    Complex v = std::log(double(p)) * f.exact(double(p));
    re.add(v.real());
    im.add(v.imag());
  }
  Complex tail = 0.0;
  double dropped = 0.0;
  double lp = std::log(double(spec.prime_cutoff));
  for (const auto& t : f.series.terms()) {
    require_convergent(t.expo);
    if (t.expo.real() > PSeries::kFinalMax) {
      dropped += std::abs(t.coef) * lp * std::exp(lp * (1.0 - t.expo.real())) / (t.expo.real() - 1.0);
      continue;
    }
    tail += t.coef * prime_zeta_log_tail(t.expo, spec.prime_cutoff);
  }
  Complex h(re.value(), im.value());
  EulerValue out;
  out.value = h + tail;
  out.err_est = dropped + 1e-14 * (1.0 + std::abs(h));
  return out;
}

EulerValue P_D(Complex z, Complex w, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [z, w](double p) {
    double lp = std::log(p);
    return -cexpm1((z - w) * lp) / (cexpm1((z + w) * lp) * (p + 1.0));
  };
  f.series = (one() - mono(1.0, w - z)) * inv_pow_minus_1(z + w) * inv_p_plus_1();
  return euler_product(f, spec);
}

EulerValue P_big(Complex z, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [z](double p) { return 1.0 / (cexpm1((z - 0.5) * std::log(p)) * (p + 1.0)); };
  f.series = inv_pow_minus_1(z - 0.5) * inv_p_plus_1();
  return euler_product(f, spec);
}

EulerValue P_D2(Complex alpha, Complex beta, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [alpha, beta](double p) {
    double lp = std::log(p);
    Complex d = alpha - beta;
    return cexpm1(d * lp) / (std::exp(d * lp) * (p + 1.0) * cexpm1((1.0 + alpha + beta) * lp));
  };
  f.series = (one() - mono(1.0, alpha - beta)) * inv_p_plus_1() * inv_pow_minus_1(1.0 + alpha + beta);
  f.p_min = 3;
  return euler_product(f, spec);
}

EulerValue A_D_arith_factor(Complex alpha, Complex beta, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [alpha, beta](double p) {
    double lp = std::log(p);
    Complex u = ppow(lp, 1.0 + alpha + beta);
    Complex a = ppow(lp, 1.0 + 2.0 * alpha) / (p + 1.0);
    Complex b = ppow(lp, alpha + beta) / (p + 1.0);
    // (1 - a - b)/(1 - u) - 1
    return (u - a - b) / (1.0 - u);
  };
  PSeries u = mono(1.0, 1.0 + alpha + beta);
  PSeries a = mono(1.0, 1.0 + 2.0 * alpha) * inv_p_plus_1();
  PSeries b = mono(1.0, alpha + beta) * inv_p_plus_1();
  f.series = (u - a - b) * PSeries::geometric(u);
  return euler_product(f, spec);
}

EulerValue A_odd_factor(Complex alpha, Complex beta, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [alpha, beta](double p) {
    double lp = std::log(p);
    Complex d = alpha - beta;
    return cexpm1(d * lp) / (p * std::exp(d * lp) * cexpm1((1.0 + alpha + beta) * lp));
  };
  f.series = (one() - mono(1.0, alpha - beta)) * mono(1.0, 1.0) * inv_pow_minus_1(1.0 + alpha + beta);
  f.p_min = 3;
  return euler_product(f, spec);
}

Complex zeta_guarded(Complex s) {
  if (std::abs(s - 1.0) < 1e-6) throw Error(Errc::pole, "ζ argument within 1e-6 of s = 1");
  return zeta(s);
}

Complex zeta_removed_guarded(Complex s, std::uint64_t k) {
  if (std::abs(s - 1.0) < 1e-6) throw Error(Errc::pole, "ζ argument within 1e-6 of s = 1");
  return zeta_removed(s, k);
}

Complex residue_s1_AD(Complex w, Complex z, const EulerSpec& spec) {
  return zeta_guarded(2.0 * w) / (2.0 * zeta(2.0) * zeta_guarded(z + w)) * P_D(z, w, spec).value;
}

Complex residue_s1_A(Complex alpha, Complex beta, const EulerSpec& spec) {
  return zeta_removed_guarded(1.0 + 2.0 * alpha, 2) /
         (2.0 * zeta_removed_guarded(1.0 + alpha + beta, 2)) * A_odd_factor(alpha, beta, spec).value;
}

Complex residue_C_w32(Complex s, Complex z, const EulerSpec& spec) {
  Complex two = 2.0;
  return P_big(z, spec).value * zeta_guarded(2.0 * s) * reciprocal_zeta(z - 0.5) / zeta(2.0) *
         std::pow(two, z + 0.5) / (3.0 * std::pow(two, z - 0.5) - 2.0);
}

Complex residue_s_1malpha_A(Complex alpha, Complex beta, const EulerSpec& spec) {
  Complex two = 2.0;
  return std::pow(Complex(kPi), alpha) * go_plus_ge(0.5 + alpha) *
         P_big(1.5 - alpha + beta, spec).value * zeta_guarded(1.0 - 2.0 * alpha) *
         reciprocal_zeta(1.0 - alpha + beta) /
         (zeta(2.0) * (6.0 - std::pow(two, 1.0 + alpha - beta)));
}

Complex residue_s_1malpha_A_cos_form(Complex alpha, Complex beta, const EulerSpec& spec) {
  Complex two = 2.0;
  return std::pow(Complex(kPi), alpha - 0.5) * std::cos(kPi * alpha / 2.0) * gamma(0.5 - alpha) *
         P_big(1.5 - alpha + beta, spec).value * zeta_guarded(1.0 - 2.0 * alpha) *
         reciprocal_zeta(1.0 - alpha + beta) / zeta(2.0) * std::pow(two, beta) /
         (3.0 * std::pow(two, beta - alpha) - 1.0);
}

EulerValue prime_sum_thm3(Complex r, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [r](double p) { return 1.0 / (p * cexpm1((1.0 + 2.0 * r) * std::log(p))); };
  f.series = mono(1.0, 1.0) * inv_pow_minus_1(1.0 + 2.0 * r);
  f.p_min = 3;
  return prime_log_sum(f, spec);
}

EulerValue prime_sum_thm4(Complex r, const EulerSpec& spec) {
  EulerFactor f;
  f.exact = [r](double p) { return 1.0 / ((p + 1.0) * cexpm1((1.0 + 2.0 * r) * std::log(p))); };
  f.series = inv_p_plus_1() * inv_pow_minus_1(1.0 + 2.0 * r);
  f.p_min = 3;
  return prime_log_sum(f, spec);
}

}  // namespace ratios
