#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ratios/arith.hpp"
#include "ratios/character.hpp"

namespace ratios {

enum class LMethod { hurwitz, afe, direct };

std::string_view method_name(LMethod m) noexcept;

struct LValue {
  Complex value;
  Complex deriv;  // ∂/∂s, zero unless requested
  double err_est = 0.0;
  LMethod method = LMethod::direct;
};

inline constexpr std::uint64_t kHurwitzMaxModulus = 10000;

/// L(s, χ) = q^{-s} Σ_{r=1}^{q} χ(r) ζ(s, r/q) for any table character.
LValue l_hurwitz_table(Complex s, const DirichletChar& chi, bool with_deriv = false);

/// L(s, χ_n) for odd n <= 10^4. Throws Errc::modulus_too_large beyond that.
Complex l_hurwitz(Complex s, std::uint64_t n);

struct AfeOptions {
  double x_max = 40.0;     // terms with π m²/q > x_max are dropped
  double trunc_c = 12.0;   // hard cap m <= C √q
  double step = 1.0 / 64;  // kernel table spacing in u = log(π m²/q)
};

/// Smoothed approximate functional equation from the theta-integral split at
/// y = 1, for real primitive characters of conductor q <= q_max. The
/// incomplete-gamma kernels for all requested points are tabulated once and
/// interpolated (quintic Hermite), so one instance serves a whole sweep.
class AfeEvaluator {
 public:
  AfeEvaluator(std::vector<Complex> points, std::uint64_t q_max, bool with_deriv,
               AfeOptions opt = {});

  std::size_t m_max(std::uint64_t q) const;
  std::uint64_t q_max() const noexcept { return q_max_; }
  const std::vector<Complex>& points() const noexcept { return points_; }

  /// chi[m] for 0 <= m <= m_max(q). out.size() == points().size().
  void eval(std::uint64_t q, bool odd, std::span<const std::int8_t> chi,
            std::span<LValue> out) const;

 private:
  struct Kernel {
    // per node: value, first and second u-derivative
    std::vector<Complex> value;  // combined F_a + F_a'
    std::vector<Complex> deriv;  // (K_a - K_a')/2, empty unless requested
  };
  Kernel build(Complex a, Complex a_dual) const;

  std::vector<Complex> points_;
  std::uint64_t q_max_;
  bool with_deriv_;
  AfeOptions opt_;
  double u_lo_;
  std::size_t nodes_;
  std::vector<Kernel> even_;  // per point
  std::vector<Kernel> odd_;
  std::vector<double> log_m_;
};

struct LEvalConfig {
  std::uint64_t hurwitz_tier = 1000;  // |D| <= tier uses the Hurwitz route
  bool with_deriv = false;
  AfeOptions afe;
};

/// L(s_i, (D/·)) for primitive real characters given by a signed discriminant
/// D (D > 0 even character, D < 0 odd, |D| the conductor). Thread-safe.
class QuadraticLEvaluator {
 public:
  QuadraticLEvaluator(std::vector<Complex> points, std::uint64_t q_max, LEvalConfig cfg = {});

  void eval(std::int64_t d, std::span<LValue> out) const;
  /// The method eval() uses for discriminant d.
  LMethod method_for(std::int64_t d) const noexcept;
  const std::vector<Complex>& points() const noexcept { return afe_.points(); }
  bool with_deriv() const noexcept { return cfg_.with_deriv; }

 private:
  LEvalConfig cfg_;
  AfeEvaluator afe_;
  LegendreTable legendre_;
};

/// L(s, χ_n) for odd squarefree n through the approximate functional equation.
/// Throws Errc::not_primitive otherwise.
LValue l_afe(Complex s, std::uint64_t n, AfeOptions opt = {}, bool with_deriv = false);

/// L(s, χ_n) for odd squarefree n: Hurwitz for n <= 10^4, AFE beyond.
LValue l_primitive(Complex s, std::uint64_t n, bool with_deriv = false);

/// L_{(2)}(s, χ_n) for any odd n, from the squarefree kernel.
Complex l2removed(Complex s, std::uint64_t n, const FactorSieve& sieve);

/// L'/L(s, χ_n) for odd squarefree n by a 32-point contour of radius 0.01.
/// Throws Errc::zero_detected when |L| < 1e-12 on the contour.
Complex log_derivative(Complex s, std::uint64_t n);

/// K(s, χ) = n^{-s} Σ_{r=1}^{n} τ(χ, r) ζ(s, r/n); tau[r mod n] given.
Complex k_series_from_tau(Complex s, std::span<const Complex> tau);

/// K(s, χ_n) for odd n <= 10^4.
Complex k_series(Complex s, std::uint64_t n, const FactorSieve& sieve);

struct IdentitySides {
  Complex lhs;
  Complex rhs;
  double residual() const { return std::abs(lhs - rhs); }
};

/// L(s, χ_n) against ε π^{s-1/2} n^{-s} Γ_{e/o}(s) K(1-s, χ_n), ε the parity constant.
IdentitySides funceq_gauss_sides(Complex s, std::uint64_t n, const FactorSieve& sieve);
double funceq_gauss_check(Complex s, std::uint64_t n, const FactorSieve& sieve);

/// Σ*_{d <= d_max} χ(d) d^{-s} over 1 and the fundamental discriminants.
Complex l_D_partial(Complex s, const DirichletChar& chi, std::uint64_t d_max,
                    const FactorSieve& sieve);

/// Closed form of the fundamental-discriminant series through L(s, χψ_{±1}).
/// Throws Errc::divergent_region for Re(s) <= 1.
Complex l_D_closed(Complex s, const DirichletChar& chi);

/// Residual of θ_χ(y) against (1/(n√y)) θ_τ(1/(y n²)) (even χ_n), or of the
/// m-weighted pair with factor -i/(n² y^{3/2}) (odd χ_n).
IdentitySides theta_funceq_sides(std::uint64_t n, double y, const FactorSieve& sieve);
double theta_funceq_check(std::uint64_t n, double y, const FactorSieve& sieve);

}  // namespace ratios
