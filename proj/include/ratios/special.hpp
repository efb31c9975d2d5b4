#pragma once

#include <complex>
#include <cstdint>

namespace ratios {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Γ(s). Throws Errc::pole at non-positive integers.
Complex gamma(Complex s);

/// 1/Γ(s), entire.
Complex rgamma(Complex s);

/// log Γ(s) on the principal branch for Re(s) > 0, continued by reflection
/// elsewhere (branch not guaranteed there).
Complex lgamma(Complex s);

/// Γ'(s)/Γ(s).
Complex digamma(Complex s);

/// Γ((1-s)/2)/Γ(s/2)
Complex gamma_e(Complex s);
/// Γ((2-s)/2)/Γ((s+1)/2)
Complex gamma_o(Complex s);
/// Closed form of gamma_e(s) + gamma_o(s).
Complex go_plus_ge(Complex s);

/// Riemann zeta via Euler-Maclaurin. Throws Errc::pole at s = 1.
Complex zeta(Complex s);
/// ζ'(s), analytic differentiation of the Euler-Maclaurin formula.
Complex zeta_deriv(Complex s);
/// 1/ζ(s) continued through s = 1 (value 0 there).
Complex reciprocal_zeta(Complex s);
/// ζ(s) ∏_{p | k} (1 - p^{-s}).
Complex zeta_removed(Complex s, std::uint64_t k);
/// 1/ζ_{(k)}(s), entire in the same sense as reciprocal_zeta.
Complex reciprocal_zeta_removed(Complex s, std::uint64_t k);

/// Hurwitz zeta ζ(s, a) for a > 0. Throws Errc::pole at s = 1.
Complex hurwitz_zeta(Complex s, double a);
/// ∂/∂s ζ(s, a).
Complex hurwitz_zeta_deriv(Complex s, double a);

/// Both at once; shares the power evaluations.
struct HurwitzPair {
  Complex value;
  Complex deriv;
};
HurwitzPair hurwitz_zeta_with_deriv(Complex s, double a);

enum class WeightKind { exponential };

struct WeightSpec {
  WeightKind kind = WeightKind::exponential;
};

/// f(x) for the weight.
double weight_value(const WeightSpec& spec, double x);

/// Mellin transform of the weight. Throws Errc::out_of_strip for Re(s) <= 0.
Complex mellin_weight(const WeightSpec& spec, Complex s);

}  // namespace ratios
