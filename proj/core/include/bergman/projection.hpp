#pragma once

// Bergman projection of the unimodular power symbols
//   φ(z) = Π ((1 − z z̄ᵢ)/|1 − z z̄ᵢ|)^{βᵢ}
// by an exact Gamma-type series and, independently, by disc quadrature.

#include <complex>
#include <cstddef>
#include <vector>

#include "bergman/discquad.hpp"
#include "bergman/polynomial.hpp"

namespace bergman::projection {

struct SymbolFactor {
  std::complex<double> base{1.0, 0.0};  ///< unimodular point zᵢ
  double exponent = 0.0;                ///< βᵢ
};

class PowerSymbol {
 public:
  /// Empty product, φ ≡ 1.
  PowerSymbol() = default;

  /// Validates |zᵢ| = 1 (to 1e-12), βᵢ > −2 and pairwise distinct bases.
  explicit PowerSymbol(std::vector<SymbolFactor> factors);

  /// φ_β with base point 1.
  static PowerSymbol single(double beta);

  /// Skips the βᵢ > −2 check so that annihilator symbols such as φ₋₄ can be
  /// built. Unimodularity and distinctness are still enforced.
  static PowerSymbol unchecked(std::vector<SymbolFactor> factors);

  const std::vector<SymbolFactor>& factors() const noexcept { return factors_; }
  bool is_unchecked() const noexcept { return unchecked_; }

  std::complex<double> operator()(const discquad::DiscPoint& p) const;

 private:
  static void validate(const std::vector<SymbolFactor>& factors, bool check_exponents);

  std::vector<SymbolFactor> factors_;
  bool unchecked_ = false;
};

/// Truncated power series Σ_{n ≤ N} c_n z^n.
///
/// `tail_bound` is B = sup_{n > N} n|c_n|, so the omitted part of the
/// derivative satisfies |Σ_{n>N} n c_n z^{n−1}| ≤ B |z|^N / (1 − |z|).
struct TaylorSeries {
  std::vector<std::complex<double>> coeffs;
  double tail_bound = 0.0;

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::complex<double> value(std::complex<double> z) const;
  std::complex<double> derivative(std::complex<double> z) const;
  /// Bound on the omitted derivative tail at radius r < 1.
  double derivative_tail(double r) const;
};

/// c_{β,n} with its truncation error estimate.
struct SeriesCoefficient {
  double value = 0.0;
  double error = 0.0;
  std::size_t terms = 0;        ///< explicit terms summed before the tail estimate
  bool even_degenerate = false; ///< β is a non-negative even integer
};

/// Default cap on explicit inner-sum terms.
inline constexpr std::size_t kDefaultInnerCap = 1'000'000;

/// c_{β,n} = (n+1)/(Γ(−β/2)Γ(β/2)) Σ_m Γ(m+β/2)Γ(m+n−β/2)/(m!(m+n+1)!).
///
/// Summed as (n+1) Σ_m a_{m+n} b_m/(m+n+1) with a, b the binomial
/// coefficients of (1−w)^{β/2} and (1−w̄)^{−β/2}, which keeps every term
/// pole-free. The remainder beyond the explicit terms is an Euler–Maclaurin
/// integral comparison; terms are added until its error estimate falls below
/// 1e-12 relative or `inner_cap` is reached. At even β ≥ 0 the sum returns
/// exact zeros past the polynomial degree. Requires β > −2.
SeriesCoefficient coefficient_series(double beta, std::size_t n, std::size_t inner_cap = kDefaultInnerCap);

/// (n+1) ∫ φ(w) w̄^n dA(w) through integrate_extrapolated.
discquad::ExtrapolatedIntegral coefficient_quadrature(const PowerSymbol& symbol, std::size_t n,
                                                      const discquad::DiscQuadrature& q);

/// Coefficients 0..order of Pφ_β for the single factor at base 1, with the
/// derivative tail bound. Requires order ≥ 1 and β > −2.
TaylorSeries project(double beta, std::size_t order, std::size_t inner_cap = kDefaultInnerCap);

/// Pf(z) = ∫ f(w)/(1 − z w̄)² dA(w) by the tensor rule. Requires |z| < 1.
std::complex<double> kernel_eval(const discquad::Integrand& f, std::complex<double> z,
                                 const discquad::DiscQuadrature& q);

/// lim n·c_{β,n} = −2 sin(βπ/2)/(π(β+2)); exactly 0 at even β.
double asymptotic_limit(double beta);

struct AsymptoticRow {
  std::size_t n = 0;
  double scaled = 0.0;  ///< n·c_{β,n}
  double limit = 0.0;
  double relative_error = 0.0;  ///< absolute error when the limit is 0
};

struct AsymptoticTable {
  std::vector<AsymptoticRow> rows;
  bool even_degenerate = false;
  bool error_decreasing = false;
};

/// Tabulates n·c_{β,n} against its limit along n_grid. Requires β > 0.
AsymptoticTable asymptotic_law_check(double beta, const std::vector<std::size_t>& n_grid,
                                     std::size_t inner_cap = kDefaultInnerCap);

/// |∫ F φ̄_{−2k} dA| through ε-extrapolation. Vanishes for k ≥ 2; k = 1 is
/// accepted and gives a nonzero value. Requires k ≥ 1 and deg F ≤ 10.
double annihilator_check(int k, const Polynomial& F, const discquad::DiscQuadrature& q);

}  // namespace bergman::projection
