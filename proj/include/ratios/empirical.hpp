#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ratios/arith.hpp"
#include "ratios/eulerprod.hpp"
#include "ratios/lfunc.hpp"
#include "ratios/special.hpp"

namespace ratios {

/// Optional memo for the per-discriminant L-values of a sweep. lookup() must
/// only succeed with values produced by the same method, so a warm memo never
/// changes results. offer() may be called concurrently.
class LValueMemo {
 public:
  virtual ~LValueMemo() = default;
  virtual bool lookup(std::int64_t d, std::span<const Complex> points, bool with_deriv, LMethod method,
                      std::span<LValue> out) const = 0;
  virtual void offer(std::int64_t d, std::span<const Complex> points, bool with_deriv,
                     std::span<const LValue> values) = 0;
};

struct SweepConfig {
  int theorem = 2;  // 1..4
  Complex alpha;    // r for theorems 3 and 4
  Complex beta;     // ignored for theorems 3 and 4
  WeightSpec weight;
  double cap_factor = 28.0;  // n_cap = cap_factor * X; e^{-28} < 1e-12 weight tail
  LEvalConfig levels;        // evaluator tiers
  unsigned workers = 1;
  LValueMemo* memo = nullptr;
};

inline constexpr std::size_t kSweepChunk = 4096;
/// Smallest Re(β) (theorems 1, 2) or Re(r) (theorems 3, 4) a sweep accepts:
/// 1/L and L'/L stay away from the zeros near the critical line.
inline constexpr double kShiftFloor = 0.05;

/// Per-modulus summands (before weighting) for every n <= n_cap of the
/// theorem's family; entries outside the family are zero. Index 0 unused.
std::vector<Complex> sweep_terms(const SweepConfig& cfg, std::uint64_t n_cap, const FactorSieve& sieve);

/// Σ_n terms[n] f(n/X), chunked with a fixed chunk size and combined by a
/// pairwise tree, so the result does not depend on the worker count.
Complex weighted_sum(std::span<const Complex> terms, double X, const WeightSpec& weight, unsigned workers);

/// The smoothed sums for several X from one pass over n <= cap_factor * max X.
std::vector<Complex> empirical_sweep(const SweepConfig& cfg, std::span<const double> xs,
                                     const FactorSieve& sieve);
Complex empirical(const SweepConfig& cfg, double X, const FactorSieve& sieve);

/// L'/L(s, χ_n) for odd n from the kernel: the primitive log-derivative plus
/// Σ_{p | n1, p ∤ n0} χ_{n0}(p) log p/(p^s - χ_{n0}(p)).
Complex composite_log_derivative(Complex s, std::uint64_t n, Complex kernel_log_deriv,
                                 const FactorSieve& sieve);

struct ReportRow {
  double X = 0.0;
  Complex alpha;
  Complex beta;
  Complex empirical;
  Complex term1;
  Complex term2;
  double abs_err = 0.0;
  double rel_err = 0.0;
};

struct ComparisonReport {
  int theorem = 0;
  std::vector<ReportRow> rows;
  double fitted_slope = 0.0;  // NaN when fewer than two rows have X >= kFitMinX
  double theorem_exponent = 0.0;
};

inline constexpr double kFitMinX = 1e3;

/// Least-squares slope of log|err| against log X over rows with X >= kFitMinX.
double fit_error_slope(const std::vector<ReportRow>& rows);

/// Joins the empirical sums with the theorem's main terms on an ascending grid.
ComparisonReport compare(const SweepConfig& cfg, std::span<const double> xs, const FactorSieve& sieve,
                         const EulerSpec& spec = {});

}  // namespace ratios
