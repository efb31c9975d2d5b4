#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ratios/arith.hpp"
#include "ratios/eulerprod.hpp"

namespace ratios {

/// Outcome of one identity check: the worst residual seen against its bound.
struct CheckResult {
  std::string name;
  double worst = 0.0;
  double tol = 0.0;
  double seconds = 0.0;
  std::string detail;  // where the worst residual occurred

  bool pass() const { return worst <= tol; }
};

/// `corruption` scales the reference side of every comparison by
/// (1 + corruption); nonzero values exist to prove the checks can fail.
struct CheckOptions {
  double corruption = 0.0;
};

/// G(χ_n, q) against the brute-force τ for odd n <= n_max, 0 <= q <= q_max.
CheckResult check_gauss(std::uint64_t n_max, std::int64_t q_max, const FactorSieve& sieve,
                        CheckOptions opt = {});

/// Functional equation through K(1-s, χ_n) for all odd n <= n_max.
CheckResult check_funceq(std::uint64_t n_max, const std::vector<Complex>& points, const FactorSieve& sieve,
                         CheckOptions opt = {});

/// Σ*_{d <= d_max} χ(d) d^{-2} against the closed form, χ ∈ {χ_3, χ_5, trivial}.
CheckResult check_discriminant_series(std::uint64_t d_max, const FactorSieve& sieve, CheckOptions opt = {});

/// Duplication, reflection, the 2^s sin form of Γ_e and the Γ_o + Γ_e closed
/// form, relative residuals on fixed 20-point grids.
std::vector<CheckResult> check_gamma(CheckOptions opt = {});

/// Theta inversion for odd n <= n_max at the given y.
CheckResult check_theta(std::uint64_t n_max, const std::vector<double>& ys, const FactorSieve& sieve,
                        CheckOptions opt = {});

/// Square-indexed double sum for res_{s=1} A_D at (w, z) over mk <= bound.
Complex residue_s1_AD_bruteforce(Complex w, Complex z, std::uint64_t bound, const FactorSieve& sieve);
/// Square-indexed double sum for res_{s=1} A at w = 1/2+α, z = 1/2+β over odd mk <= bound.
Complex residue_s1_A_bruteforce(Complex alpha, Complex beta, std::uint64_t bound, const FactorSieve& sieve);

/// P(3/2) = ζ(2), the P_{D,2} appendix identity and both residue oracles.
/// `sieve` must cover √bound.
std::vector<CheckResult> check_euler(std::uint64_t bound, const FactorSieve& sieve, const EulerSpec& spec = {},
                                     CheckOptions opt = {});

}  // namespace ratios
