#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ratios/arith.hpp"
#include "ratios/lfunc.hpp"

namespace ratios {

/// Region labels: R0..R4 for the fundamental-discriminant series, S0..S4 for
/// the odd-modulus series, P for the initial domain of the Gauss-sum series.
std::vector<std::string> region_classify(Complex s, Complex w, Complex z);
bool in_region(const std::string& label, Complex s, Complex w, Complex z);

/// p(s, w) = (s - 1)(s + w - 3/2)
inline Complex poly_factor(Complex s, Complex w) { return (s - 1.0) * (s + w - 1.5); }

/// Σ*_{d <= d_max} L(w, χ_d)/(L(z, χ_d) d^s) over d = 1 and the fundamental
/// discriminants, χ_d = (d/·).
Complex A_D_partial(Complex s, Complex w, Complex z, std::uint64_t d_max, const FactorSieve& sieve,
                    LEvalConfig cfg = {});

/// Σ_{n odd <= n_max} L_{(2)}(w, χ_n)/(L_{(2)}(z, χ_n) n^s).
Complex A_partial(Complex s, Complex w, Complex z, std::uint64_t n_max, const FactorSieve& sieve,
                  LEvalConfig cfg = {});

/// Σ*_{d <= d_max} d^{-s} (Σ_{m <= M} χ_d(m) m^{-w})(Σ_{k <= M} μ(k) χ_d(k) k^{-z}):
/// the m, k sums taken first as truncated Dirichlet series.
Complex A_D_double_loop(Complex s, Complex w, Complex z, std::uint64_t d_max, std::uint64_t mk_max,
                        const FactorSieve& sieve);

/// Σ_{m, k odd <= M} μ(k) m^{-w} k^{-z} Σ_{n odd <= n_max} (mk/n) n^{-s}.
Complex A_exchanged(Complex s, Complex w, Complex z, std::uint64_t n_max, std::uint64_t mk_max,
                    const FactorSieve& sieve);

/// Σ_{m, k <= T} μ(k) m^{-w} k^{-z} L_D(s, (·/mk)) with the closed form of
/// the fundamental-discriminant series; Re(s) > 1.
Complex A_D_exchanged(Complex s, Complex w, Complex z, std::uint64_t t_max, const FactorSieve& sieve);

/// Richardson limit of (s-1) A_D_exchanged(s, w, z) as s -> 1 from
/// δ ∈ {0.04, 0.02, 0.01}.
Complex A_D_residue_extrapolated(Complex w, Complex z, std::uint64_t t_max, const FactorSieve& sieve);

/// Σ_{q <= Q} Σ_{l odd <= L} τ((4l/·), q) a_{z-w}(l)/(q^s l^w)
Complex C_partial(Complex s, Complex w, Complex z, std::uint64_t q_max, std::uint64_t l_max,
                  const FactorSieve& sieve);

/// Σ_{q <= Q} Σ_{l <= L} G((·/l), q) ψ(l) ψ'(q) a_{z-w}(l)/(l^w q^s), ψ, ψ' from
/// the characters modulo 8 (index j for ψ_j).
Complex C_twisted_partial(Complex s, Complex w, Complex z, int psi, int psi_prime, std::uint64_t q_max,
                          std::uint64_t l_max, const FactorSieve& sieve);

/// C_partial rebuilt from the six twisted pieces, each with the q-range the
/// rearrangement induces.
Complex C_from_twists(Complex s, Complex w, Complex z, std::uint64_t q_max, std::uint64_t l_max,
                      const FactorSieve& sieve);

/// D(w, t, q; ψ) = Σ_{l <= L} G((·/l), q) ψ(l) a_t(l)/l^w.
Complex D_direct(Complex w, Complex t, std::uint64_t q, int psi, std::uint64_t l_max,
                 const FactorSieve& sieve);
/// The same through L(w-1/2, (4q/·)ψ)/ζ_{(4q)}(2w-1) · E · P_{p|q}.
Complex D_factored(Complex w, Complex t, std::uint64_t q, int psi, const FactorSieve& sieve);

/// |L(s, (4mk/·)) - π^{s-1/2}Γ((1-s)/2)/(4^s Γ(s/2)) (mk)^{-s} K(1-s, (4mk/·))|
double funceq_s_termwise(Complex s, std::uint64_t m, std::uint64_t k, const FactorSieve& sieve);

/// |A_D_partial(s,w,z) - π^{w-1/2} Γ_e(w) A_D_partial(s+w-1/2, 1-w, z)|, same d range.
double funceq_w_check(Complex s, Complex w, Complex z, std::uint64_t d_max, const FactorSieve& sieve);

}  // namespace ratios
