#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ratios/arith.hpp"

namespace ratios {

struct EulerSpec {
  std::uint32_t prime_cutoff = 1'000'000;
};

struct EulerValue {
  Complex value;
  double err_est = 0.0;
};

/// Primes up to `limit`, built once per limit and shared.
std::span<const std::uint32_t> primes_upto(std::uint32_t limit);

/// Finite sum of monomials c p^{-e} in a formal prime variable, used to
/// expand Euler factors for p beyond the explicit cutoff.
class PSeries {
 public:
  struct Term {
    Complex coef;
    Complex expo;
  };

  static constexpr double kFinalMax = 4.5;  // Re e beyond this is dropped from tails
  static constexpr double kWorkMax = 8.5;   // intermediate truncation

  PSeries() = default;
  static PSeries constant(Complex c);
  static PSeries monomial(Complex c, Complex e);

  PSeries operator+(const PSeries& o) const;
  PSeries operator-(const PSeries& o) const;
  PSeries operator*(const PSeries& o) const;
  PSeries scaled(Complex c) const;

  /// 1/(1 - x); every exponent of x must have positive real part.
  static PSeries geometric(const PSeries& x);
  /// log(1 + x); same requirement.
  static PSeries log1p(const PSeries& x);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  Complex eval(double p) const;

 private:
  void push(Complex c, Complex e);
  std::vector<Term> terms_;
};

/// Σ_{p > P} p^{-e} for Re e > 1, from log ζ and the explicit primes below P.
Complex prime_zeta_tail(Complex e, std::uint32_t cutoff);
/// Σ_{p > P} log p · p^{-e}.
Complex prime_zeta_log_tail(Complex e, std::uint32_t cutoff);

/// One Euler product ∏_{p >= p_min} (1 + c_p): `exact` gives c_p for the
/// explicit primes, `series` its expansion for the tail.
struct EulerFactor {
  std::function<Complex(double p)> exact;
  PSeries series;
  std::uint32_t p_min = 2;
};

/// Σ_{p >= p_min} log(1 + c_p). Throws Errc::divergent_region when a tail
/// monomial has Re e <= 1.
EulerValue euler_log(const EulerFactor& f, const EulerSpec& spec = {});
EulerValue euler_product(const EulerFactor& f, const EulerSpec& spec = {});
/// Σ_{p >= p_min} log p · c_p.
EulerValue prime_log_sum(const EulerFactor& f, const EulerSpec& spec = {});

/// ∏_p (1 + (1 - p^{z-w})/((p^{z+w} - 1)(p + 1)))
EulerValue P_D(Complex z, Complex w, const EulerSpec& spec = {});
/// ∏_p (1 + 1/((p^{z-1/2} - 1)(p + 1)))
EulerValue P_big(Complex z, const EulerSpec& spec = {});
/// ∏_{p>2} (1 + (p^{α-β} - 1)/(p^{α-β}(p + 1)(p^{1+α+β} - 1)))
EulerValue P_D2(Complex alpha, Complex beta, const EulerSpec& spec = {});
/// ∏_p (1 - p^{-1-α-β})^{-1}(1 - 1/((p+1)p^{1+2α}) - 1/((p+1)p^{α+β}))
EulerValue A_D_arith_factor(Complex alpha, Complex beta, const EulerSpec& spec = {});
/// ∏_{p>2} (1 + (p^{α-β} - 1)/(p^{1+α-β}(p^{1+α+β} - 1)))
EulerValue A_odd_factor(Complex alpha, Complex beta, const EulerSpec& spec = {});

/// ζ(s) refusing arguments within 1e-6 of the pole (Errc::pole).
Complex zeta_guarded(Complex s);
Complex zeta_removed_guarded(Complex s, std::uint64_t k);

/// res_{s=1} A_D(s, w, z) = ζ(2w)/(2ζ(2)ζ(z+w)) P_D(z, w)
Complex residue_s1_AD(Complex w, Complex z, const EulerSpec& spec = {});
/// res_{s=1} A(s, 1/2+α, 1/2+β) = ζ_{(2)}(1+2α)/(2ζ_{(2)}(1+α+β)) · A_odd_factor
Complex residue_s1_A(Complex alpha, Complex beta, const EulerSpec& spec = {});
/// res_{w=3/2} C(s, w, z) = P(z)ζ(2s)/(ζ(2)ζ(z-1/2)) · 2^{z+1/2}/(3·2^{z-1/2} - 2)
Complex residue_C_w32(Complex s, Complex z, const EulerSpec& spec = {});
/// Coefficient of the X^{1-α} term for odd moduli:
/// π^α(Γ_o+Γ_e)(1/2+α) P(3/2-α+β) ζ(1-2α)/(ζ(2)ζ(1-α+β)(6 - 2^{1+α-β})).
/// The 1/ζ(1-α+β) factor is taken as entire (zero at α = β).
Complex residue_s_1malpha_A(Complex alpha, Complex beta, const EulerSpec& spec = {});
/// The same coefficient before the Γ_o+Γ_e closed form is applied:
/// π^{α-1/2} cos(πα/2) Γ(1/2-α) P(3/2-α+β) ζ(1-2α)/(ζ(2)ζ(1-α+β)) · 2^β/(3·2^{β-α} - 1).
Complex residue_s_1malpha_A_cos_form(Complex alpha, Complex beta, const EulerSpec& spec = {});

/// Σ_{p>2} log p/(p(p^{1+2r} - 1))
EulerValue prime_sum_thm3(Complex r, const EulerSpec& spec = {});
/// Σ_{p>2} log p/((p+1)(p^{1+2r} - 1))
EulerValue prime_sum_thm4(Complex r, const EulerSpec& spec = {});

}  // namespace ratios
