#pragma once

// Real Gamma-family functions on double precision.
//
// log_gamma is accurate to a few ulps relative on [1e-6, 1e6] including the
// neighbourhoods of its zeros at 1 and 2. Negative arguments are handled only
// by gamma_ratio, which keeps all pole bookkeeping in one place.

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace bergman::specfun {

/// Distance to a non-positive integer below which an argument is a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// True if x lies within kPoleTolerance of {0, -1, -2, ...}.
bool is_pole(double x) noexcept;

/// ln Γ(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// ln Γ(x + u) − ln Γ(x + v), evaluated without cancellation when x is large.
/// Requires x + u > 0 and x + v > 0.
double log_gamma_difference(double x, double u, double v);

struct GammaRatio {
  double value = 0.0;
  bool denominator_pole = false;  ///< value is exactly 0 because 1/Γ vanished
};

/// Π Γ(num_i) / Π Γ(den_j) with exact sign tracking.
///
/// Negative arguments go through the reflection formula. Poles are paired by
/// residues: equal pole counts cancel to a finite limit, an excess in the
/// denominator gives 0 with the flag set, an excess in the numerator throws.
GammaRatio gamma_ratio(std::span<const double> num, std::span<const double> den);
GammaRatio gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

/// Taylor coefficients of (1 − z)^alpha up to z^order.
struct BinomialCoefficientTable {
  double alpha = 0.0;
  std::vector<double> coeffs;

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double operator[](std::size_t m) const { return coeffs[m]; }
};

/// Coefficients by the recurrence a_{m+1} = a_m (m − alpha)/(m + 1). An alpha
/// within kPoleTolerance of a non-negative integer is snapped so the series
/// terminates exactly.
BinomialCoefficientTable binomial_series(double alpha, std::size_t order);

/// Γ(x+1) / (√(2πx) (x/e)^x), evaluated in log space.
double stirling_ratio(double x);

/// sin(βπ/2), returning exactly 0 when β is within kPoleTolerance of an
/// even integer (in β/2 units).
double sin_half_pi(double beta);

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
double beta_function(double a, double b);

/// Result of a series sum with its remainder estimate.
struct SeriesSum {
  double value = 0.0;
  double error = 0.0;
};

/// Σ_{k ≥ start} T(k) for a positive term T whose continuous extension
/// behaves like x^{-power} (times a function smooth in 1/x) for large x.
///
/// log_term(x) must return ln T(x) for real x ≥ start − 1. The sum is the
/// Euler–Maclaurin expansion ∫ T + T/2 − T'/12 around `start`; the integral is
/// taken by Gauss–Legendre after mapping [start, ∞) to a finite interval.
/// Requires power > 1 and start ≥ 2.
SeriesSum power_tail_sum(const std::function<double(double)>& log_term, double start,
                         double power);

}  // namespace bergman::specfun
