#pragma once

#include <complex>

#include "ratios/arith.hpp"
#include "ratios/eulerprod.hpp"
#include "ratios/special.hpp"

namespace ratios {

struct Prediction {
  Complex term1;
  Complex term2;
  double error_exponent = 0.0;
  double X = 0.0;

  Complex total() const { return term1 + term2; }
};

inline constexpr double kPoleGuard = 1e-3;

bool valid_thm1(Complex alpha, Complex beta) noexcept;
bool valid_thm2(Complex alpha, Complex beta) noexcept;
bool valid_thm3(Complex r) noexcept;
bool valid_thm4(Complex r) noexcept;

/// max{5/8 - Re α/2, 1 - Re β, 1 - Re α/2 - Re β/2}. Throws Errc::invalid_shifts.
double M_exponent(Complex alpha, Complex beta);
/// max{1 - 2Re α, 1 - 2Re β, 1/2 - Re α, 1/2 - Re β, -5/2}.
double N_exponent(Complex alpha, Complex beta);
/// max{1 - 2Re r, 1/2 - Re r, -5/2}.
double N_r(Complex r);

/// Fundamental discriminants, ratio of L(1/2+α)/L(1/2+β).
Prediction predict_thm1(double X, Complex alpha, Complex beta, const WeightSpec& weight = {},
                        const EulerSpec& spec = {});
/// All odd moduli, ratio of L_(2) values.
Prediction predict_thm2(double X, Complex alpha, Complex beta, const WeightSpec& weight = {},
                        const EulerSpec& spec = {});
/// All odd moduli, L'/L(1/2+r).
Prediction predict_thm3(double X, Complex r, const WeightSpec& weight = {}, const EulerSpec& spec = {});
/// Squarefree odd moduli, L'/L(1/2+r); requires 0 < Re r < 1/4.
Prediction predict_thm4(double X, Complex r, const WeightSpec& weight = {}, const EulerSpec& spec = {});

/// Sharp-cutoff recipe predictions for odd squarefree moduli (Mf(s) ~ 1/s
/// convention); not directly comparable to smoothed sums. Error exponent 1/2.
Prediction predict_recipe(double X, Complex alpha, Complex beta, const EulerSpec& spec = {});
Prediction predict_recipe_logderiv(double X, Complex r, const EulerSpec& spec = {});

}  // namespace ratios
