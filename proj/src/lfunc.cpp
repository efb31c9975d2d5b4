#include "ratios/lfunc.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ratios/error.hpp"
#include "ratios/gauss.hpp"
#include "ratios/special.hpp"
#include "ratios/summation.hpp"

namespace ratios {

namespace {

// 10-point Gauss-Legendre on [-1, 1], symmetric half
constexpr std::array<double, 5> kGlNode = {0.1488743389816312108848260, 0.4333953941292471907992659,
                                           0.6794095682990244062343274, 0.8650633666889845107320967,
                                           0.9739065285171717200779640};
constexpr std::array<double, 5> kGlWeight = {
    0.2955242247147528701738930, 0.2692667193099963550912269, 0.2190863625159820439955349,
    0.1494513491505805931457763, 0.0666713443086881375935688};

constexpr double kUpperCut = 120.0;  // e^{-120} is below any tolerance in use

double l1norm(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// F_a(u) = ∫_u^∞ e^{a(v-u)} exp(-e^v) dv and K_a(u) = ∫_u^∞ (v-u) e^{a(v-u)} exp(-e^v) dv on
// the nodes u_j = u_lo + j h, with their first two u-derivatives, interleaved
// as [f, f', f''] per node.
void kernel_pass(Complex a, double u_lo, double h, std::size_t nodes, std::vector<Complex>& f,
                 std::vector<Complex>& k) {
  f.assign(3 * nodes, 0.0);
  k.assign(3 * nodes, 0.0);
  Complex growth = std::exp(a * h);
  Complex f_next = 0.0;
  Complex k_next = 0.0;
  for (std::size_t jj = nodes; jj-- > 0;) {
    double u = u_lo + double(jj) * h;
    Complex f_cur = 0.0;
    Complex k_cur = 0.0;
    if (jj + 1 < nodes) {
      Complex panel_f = 0.0;
      Complex panel_k = 0.0;
      for (std::size_t i = 0; i < kGlNode.size(); ++i) {
        for (int sign : {-1, 1}) {
          double x = 0.5 * h * (1.0 + sign * kGlNode[i]);
          double wgt = 0.5 * h * kGlWeight[i];
          Complex val = wgt * std::exp(a * x - std::exp(u + x));
          panel_f += val;
          panel_k += x * val;
        }
      }
      f_cur = growth * f_next + panel_f;
      k_cur = growth * (k_next + h * f_next) + panel_k;
    }
    double g = std::exp(-std::exp(u));
    double eu = std::exp(u);
    Complex fd = -a * f_cur - g;
    Complex fdd = -a * fd + eu * g;
    Complex kd = -a * k_cur - f_cur;
    Complex kdd = -a * kd - fd;
    f[3 * jj] = f_cur;
    f[3 * jj + 1] = fd;
    f[3 * jj + 2] = fdd;
    k[3 * jj] = k_cur;
    k[3 * jj + 1] = kd;
    k[3 * jj + 2] = kdd;
    f_next = f_cur;
    k_next = k_cur;
  }
}

struct HermiteWeights {
  std::size_t j;
  double c[6];
};

inline Complex hermite_apply(const std::vector<Complex>& tab, const HermiteWeights& w) {
  const Complex* p = tab.data() + 3 * w.j;
  return w.c[0] * p[0] + w.c[1] * p[1] + w.c[2] * p[2] + w.c[3] * p[3] + w.c[4] * p[4] +
         w.c[5] * p[5];
}

void require_squarefree_odd(std::uint64_t n) {
  if (n % 2 == 0 || !is_squarefree_trial(n)) {
    throw Error(Errc::not_primitive, "χ_" + std::to_string(n) + " is not primitive");
  }
}

std::vector<std::int8_t> kronecker_values(std::int64_t d, std::size_t count) {
  std::vector<std::int8_t> v(count);
  for (std::size_t m = 0; m < count; ++m) v[m] = std::int8_t(kronecker(d, std::int64_t(m)));
  return v;
}

}  // namespace

std::string_view method_name(LMethod m) noexcept {
  switch (m) {
    case LMethod::hurwitz: return "hurwitz";
    case LMethod::afe: return "afe";
    case LMethod::direct: return "direct";
  }
  return "direct";
}

LValue l_hurwitz_table(Complex s, const DirichletChar& chi, bool with_deriv) {
  std::uint64_t q = chi.modulus;
  double lq = std::log(double(q));
  Complex acc = 0.0;
  Complex acc_d = 0.0;
  double mag = 0.0;
  for (std::uint64_t r = 1; r <= q; ++r) {
    int v = chi.values[r % q];
    if (v == 0) continue;
    double a = double(r) / double(q);
    if (with_deriv) {
      auto hz = hurwitz_zeta_with_deriv(s, a);
      acc += double(v) * hz.value;
      acc_d += double(v) * hz.deriv;
      mag += std::abs(hz.value);
    } else {
      Complex z = hurwitz_zeta(s, a);
      acc += double(v) * z;
      mag += std::abs(z);
    }
  }
  Complex qs = std::exp(-s * lq);
  LValue out;
  out.value = qs * acc;
  if (with_deriv) out.deriv = -lq * out.value + qs * acc_d;
  out.err_est = 1e-14 * mag * std::abs(qs) + 1e-15 * std::abs(out.value);
  out.method = LMethod::hurwitz;
  return out;
}

Complex l_hurwitz(Complex s, std::uint64_t n) {
  if (n > kHurwitzMaxModulus) {
    throw Error(Errc::modulus_too_large, "Hurwitz route limited to n <= 10^4, got " + std::to_string(n));
  }
  return l_hurwitz_table(s, jacobi_char(n)).value;
}

AfeEvaluator::AfeEvaluator(std::vector<Complex> points, std::uint64_t q_max, bool with_deriv,
                           AfeOptions opt)
    : points_(std::move(points)), q_max_(std::max<std::uint64_t>(q_max, 1)), with_deriv_(with_deriv),
      opt_(opt) {
  double h = opt_.step;
  u_lo_ = std::log(kPi / double(q_max_)) - h;
  double u_top = std::log(kUpperCut);
  nodes_ = std::size_t(std::ceil((u_top - u_lo_) / h)) + 1;
  for (Complex s : points_) {
    even_.push_back(build(s / 2.0, (1.0 - s) / 2.0));
    odd_.push_back(build((s + 1.0) / 2.0, (2.0 - s) / 2.0));
  }
  std::size_t mm = m_max(q_max_);
  log_m_.resize(mm + 1);
  log_m_[0] = 0.0;
  for (std::size_t m = 1; m <= mm; ++m) log_m_[m] = std::log(double(m));
}

AfeEvaluator::Kernel AfeEvaluator::build(Complex a, Complex a_dual) const {
  std::vector<Complex> fa, ka, fb, kb;
  kernel_pass(a, u_lo_, opt_.step, nodes_, fa, ka);
  kernel_pass(a_dual, u_lo_, opt_.step, nodes_, fb, kb);
  Kernel out;
  out.value.resize(fa.size());
  for (std::size_t i = 0; i < fa.size(); ++i) out.value[i] = fa[i] + fb[i];
  if (with_deriv_) {
    out.deriv.resize(ka.size());
    for (std::size_t i = 0; i < ka.size(); ++i) out.deriv[i] = 0.5 * (ka[i] - kb[i]);
  }
  return out;
}

std::size_t AfeEvaluator::m_max(std::uint64_t q) const {
  double by_x = std::floor(std::sqrt(opt_.x_max * double(q) / kPi));
  double by_c = std::floor(opt_.trunc_c * std::sqrt(double(q)));
  return std::max<std::size_t>(1, std::size_t(std::min(by_x, by_c)));
}

void AfeEvaluator::eval(std::uint64_t q, bool odd, std::span<const std::int8_t> chi,
                        std::span<LValue> out) const {
  if (q > q_max_) throw Error(Errc::modulus_too_large, "conductor beyond AFE table range");
  std::size_t mm = m_max(q);
  if (chi.size() <= mm) throw Error(Errc::usage, "character table shorter than AFE length");
  const std::size_t np = points_.size();
  const auto& kernels = odd ? odd_ : even_;
  const double h = opt_.step;
  const double inv_h = 1.0 / h;
  const double shift = std::log(kPi / double(q));

  std::array<Complex, 4> acc{}, acc_d{};
  std::array<double, 4> mag{};
  std::vector<Complex> acc_v, acc_dv;
  std::vector<double> mag_v;
  Complex* pa = acc.data();
  Complex* pd = acc_d.data();
  double* pm = mag.data();
  if (np > acc.size()) {
    acc_v.assign(np, 0.0);
    acc_dv.assign(np, 0.0);
    mag_v.assign(np, 0.0);
    pa = acc_v.data();
    pd = acc_dv.data();
    pm = mag_v.data();
  }

  for (std::size_t m = 1; m <= mm; ++m) {
    int c = chi[m];
    if (c == 0) continue;
    double u = 2.0 * log_m_[m] + shift;
    double pos = (u - u_lo_) * inv_h;
    auto j = std::size_t(pos);
    if (j + 1 >= nodes_) continue;
    double t = pos - double(j);
    double t2 = t * t, t3 = t2 * t, t4 = t3 * t, t5 = t4 * t;
    HermiteWeights w;
    w.j = j;
    w.c[0] = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
    w.c[1] = h * (t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5);
    w.c[2] = h * h * 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
    w.c[3] = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
    w.c[4] = h * (-4.0 * t3 + 7.0 * t4 - 3.0 * t5);
    w.c[5] = h * h * 0.5 * (t3 - 2.0 * t4 + t5);
    double x = odd ? double(c) * double(m) : double(c);
    for (std::size_t i = 0; i < np; ++i) {
      Complex v = x * hermite_apply(kernels[i].value, w);
      pa[i] += v;
      pm[i] += l1norm(v);
      if (with_deriv_) pd[i] += x * hermite_apply(kernels[i].deriv, w);
    }
  }

  double lq = std::log(double(q) / kPi);
  for (std::size_t i = 0; i < np; ++i) {
    Complex s = points_[i];
    Complex a0 = odd ? (s + 1.0) / 2.0 : s / 2.0;
    Complex gfac = std::exp(-a0 * lq) * rgamma(a0);
    LValue& r = out[i];
    r.value = pa[i] * gfac;
    if (with_deriv_) {
      r.deriv = gfac * (pd[i] - pa[i] * (0.5 * lq + 0.5 * digamma(a0)));
    } else {
      r.deriv = 0.0;
    }
    // beyond m_max each kernel is below e^{-x}/(x - Re a) at x >= x_max
    double re_a = std::max({0.0, a0.real(), 1.5 - a0.real()});
    double tail = 2.0 * (odd ? double(mm + 1) : 1.0) * std::exp(-opt_.x_max) /
                  std::max(1.0, opt_.x_max - re_a);
    r.err_est = (tail + 1e-13 * (1.0 + std::abs(s.imag())) * pm[i]) * std::abs(gfac);
    r.method = LMethod::afe;
  }
}

QuadraticLEvaluator::QuadraticLEvaluator(std::vector<Complex> points, std::uint64_t q_max,
                                         LEvalConfig cfg)
    : cfg_(cfg), afe_(std::move(points), q_max, cfg.with_deriv, cfg.afe),
      legendre_(std::uint32_t(afe_.m_max(q_max) + 1)) {}

LMethod QuadraticLEvaluator::method_for(std::int64_t d) const noexcept {
  std::uint64_t q = d < 0 ? std::uint64_t(-d) : std::uint64_t(d);
  if (q == 1) return LMethod::direct;
  return q <= cfg_.hurwitz_tier ? LMethod::hurwitz : LMethod::afe;
}

void QuadraticLEvaluator::eval(std::int64_t d, std::span<LValue> out) const {
  std::uint64_t q = d < 0 ? std::uint64_t(-d) : std::uint64_t(d);
  const auto& pts = afe_.points();
  if (q == 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out[i].value = zeta(pts[i]);
      out[i].deriv = cfg_.with_deriv ? zeta_deriv(pts[i]) : Complex(0.0);
      out[i].err_est = 1e-14 * std::abs(out[i].value);
      out[i].method = LMethod::direct;
    }
    return;
  }
  if (q <= cfg_.hurwitz_tier) {
    DirichletChar chi = kronecker_char(d);
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = l_hurwitz_table(pts[i], chi, cfg_.with_deriv);
    return;
  }
  thread_local std::vector<std::int8_t> buf;
  buf.resize(afe_.m_max(q) + 1);
  legendre_.fill_kronecker(d, buf);
  afe_.eval(q, d < 0, buf, out);
}

LValue l_afe(Complex s, std::uint64_t n, AfeOptions opt, bool with_deriv) {
  require_squarefree_odd(n);
  if (n == 1) {
    LValue r;
    r.value = zeta(s);
    if (with_deriv) r.deriv = zeta_deriv(s);
    r.err_est = 1e-14 * std::abs(r.value);
    r.method = LMethod::direct;
    return r;
  }
  AfeEvaluator afe({s}, n, with_deriv, opt);
  auto chi = kronecker_values(signed_discriminant_of_odd(n), afe.m_max(n) + 1);
  LValue r;
  afe.eval(n, n % 4 == 3, chi, std::span<LValue>(&r, 1));
  return r;
}

LValue l_primitive(Complex s, std::uint64_t n, bool with_deriv) {
  require_squarefree_odd(n);
  if (n <= kHurwitzMaxModulus) return l_hurwitz_table(s, jacobi_char(n), with_deriv);
  return l_afe(s, n, {}, with_deriv);
}

Complex l2removed(Complex s, std::uint64_t n, const FactorSieve& sieve) {
  auto k = sieve.squarefree_kernel(n);
  Complex base = k.n0 == 1 ? zeta(s) : l_primitive(s, k.n0).value;
  auto fix = [&](std::uint64_t p) {
    int c = k.n0 == 1 ? 1 : jacobi(std::int64_t(p), k.n0);
    base *= 1.0 - double(c) * std::exp(-s * std::log(double(p)));
  };
  fix(2);
  for (const auto& pp : sieve.factor(k.n1).pairs) fix(pp.prime);
  return base;
}

Complex log_derivative(Complex s, std::uint64_t n) {
  require_squarefree_odd(n);
  constexpr int kPoints = 32;
  constexpr double kRadius = 0.01;
  std::vector<Complex> pts;
  pts.reserve(kPoints + 1);
  pts.push_back(s);
  for (int k = 0; k < kPoints; ++k) {
    double th = 2.0 * kPi * double(k) / kPoints;
    pts.push_back(s + kRadius * Complex(std::cos(th), std::sin(th)));
  }
  std::vector<Complex> vals(pts.size());
  if (n == 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = zeta(pts[i]);
  } else if (n <= kHurwitzMaxModulus) {
    DirichletChar chi = jacobi_char(n);
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = l_hurwitz_table(pts[i], chi).value;
  } else {
    AfeEvaluator afe(pts, n, false);
    auto chi = kronecker_values(signed_discriminant_of_odd(n), afe.m_max(n) + 1);
    std::vector<LValue> out(pts.size());
    afe.eval(n, n % 4 == 3, chi, out);
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = out[i].value;
  }
  for (Complex v : vals) {
    if (std::abs(v) < 1e-12) {
      throw Error(Errc::zero_detected, "|L| below 1e-12 near s for χ_" + std::to_string(n));
    }
  }
  Complex acc = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    double th = 2.0 * kPi * double(k) / kPoints;
    acc += std::log(vals[k + 1] / vals[0]) * Complex(std::cos(th), -std::sin(th));
  }
  return acc / (double(kPoints) * kRadius);
}

Complex k_series_from_tau(Complex s, std::span<const Complex> tau) {
  std::size_t n = tau.size();
  Complex acc = 0.0;
  for (std::size_t r = 1; r <= n; ++r) {
    Complex t = tau[r % n];
    if (t == Complex(0.0)) continue;
    acc += t * hurwitz_zeta(s, double(r) / double(n));
  }
  return acc * std::exp(-s * std::log(double(n)));
}

Complex k_series(Complex s, std::uint64_t n, const FactorSieve& sieve) {
  if (n > kHurwitzMaxModulus) {
    throw Error(Errc::modulus_too_large, "K(s, χ_n) limited to n <= 10^4");
  }
  std::vector<Complex> tau(n);
  for (std::uint64_t r = 0; r < n; ++r) tau[r] = tau_quadratic(n, std::int64_t(r), sieve);
  return k_series_from_tau(s, tau);
}

IdentitySides funceq_gauss_sides(Complex s, std::uint64_t n, const FactorSieve& sieve) {
  Complex lhs = l_hurwitz_table(s, jacobi_char(n)).value;
  bool even = n % 4 == 1;
  Complex eps = even ? Complex(1.0) : Complex(0.0, -1.0);
  Complex gam = even ? gamma_e(s) : gamma_o(s);
  Complex rhs = eps * std::pow(Complex(kPi), s - 0.5) * std::exp(-s * std::log(double(n))) * gam *
                k_series(1.0 - s, n, sieve);
  return {lhs, rhs};
}

double funceq_gauss_check(Complex s, std::uint64_t n, const FactorSieve& sieve) {
  return funceq_gauss_sides(s, n, sieve).residual();
}

Complex l_D_partial(Complex s, const DirichletChar& chi, std::uint64_t d_max,
                    const FactorSieve& sieve) {
  ComplexNeumaierSum acc;
  if (d_max >= 1) acc.add(double(chi(1)));
  for (const auto& fd : enumerate_fundamental_discriminants(d_max, sieve)) {
    int c = chi(std::int64_t(fd.d));
    if (c == 0) continue;
    acc.add(double(c) * std::exp(-s * std::log(double(fd.d))));
  }
  return acc.value();
}

Complex l_D_closed(Complex s, const DirichletChar& chi) {
  if (s.real() <= 1.0) {
    throw Error(Errc::divergent_region, "fundamental-discriminant series needs Re(s) > 1");
  }
  DirichletChar psi1 = psi8_char(1);
  DirichletChar chi_p1 = char_product(chi, psi1);
  DirichletChar chi_m1 = char_product(chi, psi8_char(-1));
  DirichletChar chi2_p1 = char_product(char_product(chi, chi), psi1);
  Complex l1 = l_hurwitz_table(s, chi_p1).value;
  Complex lm1 = l_hurwitz_table(s, chi_m1).value;
  Complex l2 = l_hurwitz_table(2.0 * s, chi2_p1).value;
  double c4 = chi(4);
  double c8 = chi(8);
  Complex p4 = std::exp(-s * std::log(4.0));
  Complex p8 = std::exp(-s * std::log(8.0));
  return (0.5 + 0.5 * c4 * p4 + c8 * p8) * l1 / l2 + (0.5 - 0.5 * c4 * p4) * lm1 / l2;
}

IdentitySides theta_funceq_sides(std::uint64_t n, double y, const FactorSieve& sieve) {
  constexpr double kExpCut = 45.0;  // e^{-45} ~ 3e-20
  DirichletChar chi = jacobi_char(n);
  bool even = n % 4 == 1;
  double nn = double(n);
  double y_dual = 1.0 / (y * nn * nn);
  auto limit = [&](double yy) { return std::uint64_t(std::ceil(std::sqrt(kExpCut / (kPi * yy)))) + 1; };

  Complex lhs = 0.0;
  Complex rhs = 0.0;
  if (even) {
    lhs = double(chi(0));
    for (std::uint64_t m = 1; m <= limit(y); ++m) {
      lhs += 2.0 * double(chi(std::int64_t(m))) * std::exp(-kPi * double(m * m) * y);
    }
    Complex dual = tau_quadratic(n, 0, sieve);
    for (std::uint64_t m = 1; m <= limit(y_dual); ++m) {
      dual += 2.0 * tau_quadratic(n, std::int64_t(m), sieve) * std::exp(-kPi * double(m * m) * y_dual);
    }
    rhs = dual / (nn * std::sqrt(y));
  } else {
    for (std::uint64_t m = 1; m <= limit(y); ++m) {
      lhs += 2.0 * double(m) * double(chi(std::int64_t(m))) * std::exp(-kPi * double(m * m) * y);
    }
    Complex dual = 0.0;
    for (std::uint64_t m = 1; m <= limit(y_dual); ++m) {
      dual += 2.0 * double(m) * tau_quadratic(n, std::int64_t(m), sieve) *
              std::exp(-kPi * double(m * m) * y_dual);
    }
    rhs = Complex(0.0, -1.0) * dual / (nn * nn * y * std::sqrt(y));
  }
  return {lhs, rhs};
}

double theta_funceq_check(std::uint64_t n, double y, const FactorSieve& sieve) {
  return theta_funceq_sides(n, y, sieve).residual();
}

}  // namespace ratios
