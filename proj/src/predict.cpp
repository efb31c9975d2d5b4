#include "ratios/predict.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ratios/error.hpp"

namespace ratios {

namespace {

void guard_zeta_arg(Complex s, const char* what) {
  if (std::abs(s - 1.0) < kPoleGuard) {
    throw Error(Errc::pole_proximity, std::string(what) + " within 1e-3 of the zeta pole");
  }
}

void guard_gamma_arg(Complex s, const char* what) {
  if (s.real() > kPoleGuard) return;
  double nearest = std::round(s.real());
  if (nearest > 0.0) return;
  if (std::abs(s - Complex(nearest, 0.0)) < kPoleGuard) {
    throw Error(Errc::pole_proximity, std::string(what) + " within 1e-3 of a gamma pole");
  }
}

void require(bool ok, const char* theorem) {
  if (!ok) throw Error(Errc::invalid_shifts, std::string("shifts outside the range of ") + theorem);
}

Complex xpow(double X, Complex e) { return std::exp(e * std::log(X)); }

Complex zeta_log_deriv(Complex s) { return zeta_deriv(s) / zeta(s); }

}  // namespace

bool valid_thm1(Complex alpha, Complex beta) noexcept {
  double a = alpha.real(), b = beta.real();
  return a > -0.5 && a < 0.5 && b > 0.0 && b < 0.5 && b > std::abs(a);
}

bool valid_thm2(Complex alpha, Complex beta) noexcept {
  double a = alpha.real(), b = beta.real();
  return a > 0.0 && b > 0.0 && 1.0 + b > a;
}

bool valid_thm3(Complex r) noexcept { return r.real() > 0.0; }

bool valid_thm4(Complex r) noexcept { return r.real() > 0.0 && r.real() < 0.25; }

double M_exponent(Complex alpha, Complex beta) {
  require(valid_thm1(alpha, beta), "theorem 1");
  double a = alpha.real(), b = beta.real();
  return std::max({0.625 - a / 2.0, 1.0 - b, 1.0 - a / 2.0 - b / 2.0});
}

double N_exponent(Complex alpha, Complex beta) {
  double a = alpha.real(), b = beta.real();
  return std::max({1.0 - 2.0 * a, 1.0 - 2.0 * b, 0.5 - a, 0.5 - b, -2.5});
}

double N_r(Complex r) {
  double x = r.real();
  return std::max({1.0 - 2.0 * x, 0.5 - x, -2.5});
}

Prediction predict_thm1(double X, Complex alpha, Complex beta, const WeightSpec& weight,
                        const EulerSpec& spec) {
  require(valid_thm1(alpha, beta), "theorem 1");
  guard_zeta_arg(1.0 + 2.0 * alpha, "1+2α");
  guard_zeta_arg(1.0 - 2.0 * alpha, "1-2α");
  guard_gamma_arg(1.0 - alpha, "1-α");
  guard_gamma_arg((0.5 - alpha) / 2.0, "(1/2-α)/2");
  Complex z2 = zeta(2.0);
  Prediction out;
  out.X = X;
  out.term1 = X * mellin_weight(weight, 1.0) * zeta(1.0 + 2.0 * alpha) / (2.0 * z2) *
              reciprocal_zeta(1.0 + alpha + beta) * P_D(0.5 + beta, 0.5 + alpha, spec).value;
  out.term2 = xpow(X, 1.0 - alpha) * mellin_weight(weight, 1.0 - alpha) * zeta(1.0 - 2.0 * alpha) *
              std::pow(Complex(kPi), alpha) * gamma_e(0.5 + alpha) / (2.0 * z2) *
              reciprocal_zeta(1.0 - alpha + beta) * P_D(0.5 + beta, 0.5 - alpha, spec).value;
  out.error_exponent = M_exponent(alpha, beta);
  return out;
}

Prediction predict_thm2(double X, Complex alpha, Complex beta, const WeightSpec& weight,
                        const EulerSpec& spec) {
  require(valid_thm2(alpha, beta), "theorem 2");
  guard_zeta_arg(1.0 + 2.0 * alpha, "1+2α");
  guard_zeta_arg(1.0 - 2.0 * alpha, "1-2α");
  guard_gamma_arg(1.0 - alpha, "1-α");
  guard_gamma_arg(0.5 - alpha, "1/2-α");
  Prediction out;
  out.X = X;
  out.term1 = X * mellin_weight(weight, 1.0) * residue_s1_A(alpha, beta, spec);
  out.term2 = xpow(X, 1.0 - alpha) * mellin_weight(weight, 1.0 - alpha) *
              residue_s_1malpha_A(alpha, beta, spec);
  out.error_exponent = N_exponent(alpha, beta);
  return out;
}

Prediction predict_thm3(double X, Complex r, const WeightSpec& weight, const EulerSpec& spec) {
  require(valid_thm3(r), "theorem 3");
  guard_zeta_arg(1.0 + 2.0 * r, "1+2r");
  guard_zeta_arg(1.0 - 2.0 * r, "1-2r");
  guard_gamma_arg(1.0 - r, "1-r");
  guard_gamma_arg(0.5 - r, "1/2-r");
  Prediction out;
  out.X = X;
  out.term1 = X * mellin_weight(weight, 1.0) / 2.0 *
              (zeta_log_deriv(1.0 + 2.0 * r) + prime_sum_thm3(r, spec).value);
  out.term2 = -xpow(X, 1.0 - r) * mellin_weight(weight, 1.0 - r) * std::pow(Complex(kPi), r) *
              go_plus_ge(0.5 + r) * zeta(1.0 - 2.0 * r) / 4.0;
  out.error_exponent = N_r(r);
  return out;
}

Prediction predict_thm4(double X, Complex r, const WeightSpec& weight, const EulerSpec& spec) {
  require(valid_thm4(r), "theorem 4");
  guard_zeta_arg(1.0 + 2.0 * r, "1+2r");
  guard_zeta_arg(1.0 - 2.0 * r, "1-2r");
  Prediction out;
  out.X = X;
  out.term1 = 2.0 * X * mellin_weight(weight, 1.0) / (3.0 * zeta(2.0)) *
              (zeta_log_deriv(1.0 + 2.0 * r) + prime_sum_thm4(r, spec).value);
  out.term2 = -xpow(X, 1.0 - r) * mellin_weight(weight, 1.0 - r) * std::pow(Complex(kPi), r) *
              go_plus_ge(0.5 + r) * zeta(1.0 - 2.0 * r) / (4.0 * zeta_removed(2.0 - 2.0 * r, 2));
  out.error_exponent = 1.0 - 2.0 * r.real();
  return out;
}

Prediction predict_recipe(double X, Complex alpha, Complex beta, const EulerSpec& spec) {
  guard_zeta_arg(1.0 + 2.0 * alpha, "1+2α");
  guard_zeta_arg(1.0 - 2.0 * alpha, "1-2α");
  guard_zeta_arg(1.0 - alpha, "1-α");
  Complex z2 = zeta(2.0);
  Prediction out;
  out.X = X;
  out.term1 = 2.0 * X / (3.0 * z2) * zeta(1.0 + 2.0 * alpha) * reciprocal_zeta(1.0 + alpha + beta) *
              P_D2(alpha, beta, spec).value;
  out.term2 = xpow(X, 1.0 - alpha) * std::pow(Complex(kPi), alpha) * go_plus_ge(0.5 + alpha) *
              zeta(1.0 - 2.0 * alpha) * reciprocal_zeta(1.0 - alpha + beta) / ((1.0 - alpha) * 3.0 * z2) *
              P_D2(-alpha, beta, spec).value;
  out.error_exponent = 0.5;
  return out;
}

Prediction predict_recipe_logderiv(double X, Complex r, const EulerSpec& spec) {
  guard_zeta_arg(1.0 + 2.0 * r, "1+2r");
  guard_zeta_arg(1.0 - 2.0 * r, "1-2r");
  guard_zeta_arg(1.0 - r, "1-r");
  Complex z2 = zeta(2.0);
  Prediction out;
  out.X = X;
  out.term1 = 2.0 * X / (3.0 * z2) * (zeta_log_deriv(1.0 + 2.0 * r) + prime_sum_thm4(r, spec).value);
  out.term2 = -xpow(X, 1.0 - r) * std::pow(Complex(kPi), r) * go_plus_ge(0.5 + r) * zeta(1.0 - 2.0 * r) /
              ((1.0 - r) * 3.0 * z2) * P_D2(-r, r, spec).value;
  out.error_exponent = 0.5;
  return out;
}

}  // namespace ratios
