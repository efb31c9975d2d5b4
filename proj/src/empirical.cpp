#include "ratios/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "ratios/character.hpp"
#include "ratios/error.hpp"
#include "ratios/parallel.hpp"
#include "ratios/predict.hpp"
#include "ratios/summation.hpp"

namespace ratios {

namespace {

constexpr double kZeroGuard = 1e-12;

bool fundamental_by_sieve(std::uint64_t d, const FactorSieve& sieve) {
  switch (d % 16) {
    case 1: case 5: case 9: case 13: return sieve.mobius(d) != 0;
    case 8: return sieve.mobius(d / 8) != 0;
    case 12: return sieve.mobius(d / 4) != 0;
    default: return false;
  }
}

Complex npow(double n, Complex e) { return std::exp(-e * std::log(n)); }

void require_nonzero(Complex v, std::uint64_t n) {
  if (std::abs(v) < kZeroGuard) {
    throw Error(Errc::zero_detected, "|L| below 1e-12 at modulus " + std::to_string(n));
  }
}

// Combines per-chunk partial sums pairwise in index order.
Complex pairwise(std::vector<Complex> v) {
  if (v.empty()) return 0.0;
  while (v.size() > 1) {
    std::vector<Complex> next((v.size() + 1) / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
      next[i] = (2 * i + 1 < v.size()) ? v[2 * i] + v[2 * i + 1] : v[2 * i];
    }
    v = std::move(next);
  }
  return v[0];
}

}  // namespace

Complex composite_log_derivative(Complex s, std::uint64_t n, Complex kernel_log_deriv,
                                 const FactorSieve& sieve) {
  auto k = sieve.squarefree_kernel(n);
  std::int64_t d = signed_discriminant_of_odd(k.n0);
  Complex acc = kernel_log_deriv;
  if (k.n1 == 1) return acc;
  for (const auto& pp : sieve.factor(k.n1).pairs) {
    int c = kronecker(d, std::int64_t(pp.prime));
    if (c == 0) continue;
    double lp = std::log(double(pp.prime));
    acc += double(c) * lp / (std::exp(s * lp) - double(c));
  }
  return acc;
}

std::vector<Complex> sweep_terms(const SweepConfig& cfg, std::uint64_t n_cap, const FactorSieve& sieve) {
  if (cfg.theorem < 1 || cfg.theorem > 4) throw Error(Errc::usage, "theorem must be 1..4");
  const Complex denom_shift = cfg.theorem >= 3 ? cfg.alpha : cfg.beta;
  if (denom_shift.real() < kShiftFloor) {
    throw Error(Errc::invalid_shifts, "sweeps need Re(beta), Re(r) >= 0.05");
  }
  sieve.require(n_cap);
  std::vector<Complex> terms(n_cap + 1, 0.0);
  const bool logderiv = cfg.theorem >= 3;
  const Complex w = 0.5 + cfg.alpha;
  const Complex z = 0.5 + cfg.beta;
  // identical shifts make every ratio exactly one
  const bool unit_ratio = !logderiv && cfg.alpha == cfg.beta;

  std::vector<Complex> points = logderiv ? std::vector<Complex>{w} : std::vector<Complex>{w, z};
  LEvalConfig lc = cfg.levels;
  lc.with_deriv = logderiv;
  std::unique_ptr<QuadraticLEvaluator> eval;
  if (!unit_ratio) eval = std::make_unique<QuadraticLEvaluator>(points, std::max<std::uint64_t>(n_cap, 1), lc);

  std::size_t chunks = (n_cap + kSweepChunk) / kSweepChunk;
  parallel_for(chunks, cfg.workers, [&](std::size_t c) {
    std::uint64_t lo = std::max<std::uint64_t>(1, c * kSweepChunk);
    std::uint64_t hi = std::min<std::uint64_t>(n_cap, (c + 1) * kSweepChunk - 1);
    LValue v[2];
    std::span<LValue> vs(v, points.size());
    auto eval_d = [&](std::int64_t d) {
      if (cfg.memo && cfg.memo->lookup(d, points, logderiv, eval->method_for(d), vs)) return;
      eval->eval(d, vs);
      if (cfg.memo) cfg.memo->offer(d, points, logderiv, vs);
    };
    for (std::uint64_t n = lo; n <= hi; ++n) {
      switch (cfg.theorem) {
        case 1: {
          if (n != 1 && !fundamental_by_sieve(n, sieve)) break;
          if (unit_ratio) {
            terms[n] = 1.0;
            break;
          }
          eval_d(std::int64_t(n));
          require_nonzero(v[1].value, n);
          terms[n] = v[0].value / v[1].value;
          break;
        }
        case 2: {
          if (n % 2 == 0) break;
          if (unit_ratio) {
            terms[n] = 1.0;
            break;
          }
          auto k = sieve.squarefree_kernel(n);
          std::int64_t d = signed_discriminant_of_odd(k.n0);
          eval_d(d);
          Complex num = v[0].value, den = v[1].value;
          auto fix = [&](std::uint64_t p) {
            int ch = kronecker(d, std::int64_t(p));
            num *= 1.0 - double(ch) * npow(double(p), w);
            den *= 1.0 - double(ch) * npow(double(p), z);
          };
          fix(2);
          if (k.n1 > 1) {
            for (const auto& pp : sieve.factor(k.n1).pairs) fix(pp.prime);
          }
          require_nonzero(den, n);
          terms[n] = num / den;
          break;
        }
        case 3:
        case 4: {
          if (n % 2 == 0) break;
          auto k = sieve.squarefree_kernel(n);
          if (cfg.theorem == 4 && k.n1 != 1) break;
          eval_d(signed_discriminant_of_odd(k.n0));
          require_nonzero(v[0].value, n);
          Complex ld = v[0].deriv / v[0].value;
          terms[n] = (k.n1 == 1) ? ld : composite_log_derivative(w, n, ld, sieve);
          break;
        }
        default:
          break;
      }
    }
  });
  return terms;
}

Complex weighted_sum(std::span<const Complex> terms, double X, const WeightSpec& weight, unsigned workers) {
  std::size_t chunks = (terms.size() + kSweepChunk - 1) / kSweepChunk;
  std::vector<Complex> partial(chunks, 0.0);
  parallel_for(chunks, workers, [&](std::size_t c) {
    ComplexNeumaierSum acc;
    std::size_t lo = c * kSweepChunk;
    std::size_t hi = std::min(terms.size(), lo + kSweepChunk);
    for (std::size_t n = std::max<std::size_t>(lo, 1); n < hi; ++n) {
      if (terms[n] == Complex(0.0)) continue;
      acc.add(terms[n] * weight_value(weight, double(n) / X));
    }
    partial[c] = acc.value();
  });
  return pairwise(std::move(partial));
}

std::vector<Complex> empirical_sweep(const SweepConfig& cfg, std::span<const double> xs,
                                     const FactorSieve& sieve) {
  if (xs.empty()) return {};
  double x_max = *std::max_element(xs.begin(), xs.end());
  auto n_cap = std::uint64_t(std::ceil(cfg.cap_factor * x_max));
  auto terms = sweep_terms(cfg, n_cap, sieve);
  std::vector<Complex> out;
  out.reserve(xs.size());
  for (double X : xs) out.push_back(weighted_sum(terms, X, cfg.weight, cfg.workers));
  return out;
}

Complex empirical(const SweepConfig& cfg, double X, const FactorSieve& sieve) {
  double xs[] = {X};
  return empirical_sweep(cfg, xs, sieve)[0];
}

double fit_error_slope(const std::vector<ReportRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (r.X < kFitMinX || !(r.abs_err > 0.0)) continue;
    double x = std::log(r.X), y = std::log(r.abs_err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ComparisonReport compare(const SweepConfig& cfg, std::span<const double> xs, const FactorSieve& sieve,
                         const EulerSpec& spec) {
  if (!std::is_sorted(xs.begin(), xs.end())) throw Error(Errc::usage, "x-grid must be ascending");
  ComparisonReport rep;
  rep.theorem = cfg.theorem;
  auto emp = empirical_sweep(cfg, xs, sieve);
  Complex beta = cfg.theorem >= 3 ? cfg.alpha : cfg.beta;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Prediction p;
    switch (cfg.theorem) {
      case 1: p = predict_thm1(xs[i], cfg.alpha, cfg.beta, cfg.weight, spec); break;
      case 2: p = predict_thm2(xs[i], cfg.alpha, cfg.beta, cfg.weight, spec); break;
      case 3: p = predict_thm3(xs[i], cfg.alpha, cfg.weight, spec); break;
      default: p = predict_thm4(xs[i], cfg.alpha, cfg.weight, spec); break;
    }
    ReportRow row;
    row.X = xs[i];
    row.alpha = cfg.alpha;
    row.beta = beta;
    row.empirical = emp[i];
    row.term1 = p.term1;
    row.term2 = p.term2;
    row.abs_err = std::abs(emp[i] - p.total());
    row.rel_err = row.abs_err / std::abs(p.total());
    rep.rows.push_back(row);
    rep.theorem_exponent = p.error_exponent;
  }
  rep.fitted_slope = fit_error_slope(rep.rows);
  return rep;
}

}  // namespace ratios
