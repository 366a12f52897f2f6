#pragma once

// A¹ norms of (1 − z)^β, the exposing functional L(g) = ∫ g φ̄ dA, the
// lower-bound series for nL(g_n) on −2 < β < 0, and the log-modified
// function that is exposed but not strongly exposed.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "bergman/discquad.hpp"
#include "bergman/polynomial.hpp"
#include "bergman/projection.hpp"

namespace bergman::extremal {

enum class NormMethod { series, closed_form, quadrature };

const char* to_string(NormMethod m) noexcept;

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::series;
  double error_estimate = 0.0;
};

inline constexpr std::size_t kDefaultSeriesTerms = 4096;

/// ‖(1 − z)^β‖₁ = Σ_k a_k²/(k+1), a_k the coefficients of (1 − z)^{β/2}.
/// Explicit terms up to k_max, then an Euler–Maclaurin tail (terms decay like
/// k^{−β−3}). Throws DivergenceError for β ≤ −2.
NormResult power_norm_series(double beta, std::size_t k_max = kDefaultSeriesTerms);

/// Γ(β+2)/Γ(β/2+2)².
NormResult power_norm_closed_form(double beta);

/// ∫ |1 − z|^β dA through integrate_extrapolated.
NormResult power_norm_quadrature(double beta, const discquad::DiscQuadrature& q);

struct GnRow {
  std::size_t n = 0;
  double norm = 0.0;         ///< ‖g_n‖₁ by series
  double closed_form = 0.0;  ///< Γ(1/n)/(n Γ(1 + 1/2n)²)
  double error_estimate = 0.0;
};

/// ‖g_n‖₁ for g_n = (1/n)(1 − z)^{−2+1/n}. Requires every n ≥ 1.
std::vector<GnRow> g_n_limit_scan(const std::vector<std::size_t>& n_grid,
                                  std::size_t k_max = kDefaultSeriesTerms);

struct FunctionalEvaluation {
  std::complex<double> value;
  double error = 0.0;
  std::string integrand;   ///< short description of g·φ̄
  std::string provenance;  ///< rule and schedule used
};

/// ∫ g φ̄ dA by integrate_extrapolated; g receives the full node description.
FunctionalEvaluation exposing_functional(const discquad::Integrand& g, const projection::PowerSymbol& symbol,
                                         const discquad::DiscQuadrature& q);

/// Same, with g given by a truncated power series.
FunctionalEvaluation exposing_functional(const projection::TaylorSeries& g, const projection::PowerSymbol& symbol,
                                         const discquad::DiscQuadrature& q);

/// L(g_n) for the symbol φ_β, −2 < β < 0, with g_n the normalized
/// (1 − z)^{−2+1/n}:
///   nL(g_n) = Σ_k A_k B_k/(k+1),
/// A_k, B_k the Taylor coefficients of (1 − z)^{−(2+β/2−1/n)} and (1 − z)^{β/2}.
/// Terms decay like k^{−1−1/n}; the tail is summed by Euler–Maclaurin.
double negbeta_functional_series(double beta, std::size_t n, std::size_t k_max = kDefaultSeriesTerms);

/// (2/π)|sin(βπ/2)|/(β+2), the n → ∞ limit of negbeta_functional_series.
double negbeta_limit(double beta);

/// f(z) = c z²/((1 − z)² log²(1 − z)) normalized in A¹. The constant is
/// computed once by quadrature about z = 1 with an analytic inner tail.
class Logniet {
 public:
  explicit Logniet(const discquad::DiscQuadrature& q);

  double constant() const noexcept { return c_; }
  const discquad::DiscQuadrature& rule() const noexcept { return q_; }

  std::complex<double> value(const discquad::DiscPoint& p) const;
  /// conj(f)/|f| at p.
  std::complex<double> conj_symbol(const discquad::DiscPoint& p) const;
  /// ∫_0^{ρ_floor} |f| ρ dρ along a ray at angle arg_w.
  double abs_tail(double arg_w, double log_rho_floor) const;

 private:
  discquad::DiscQuadrature q_;
  double c_ = 0.0;
};

struct LognietRow {
  double beta = 0.0;
  std::complex<double> functional;  ///< L(f_β) = ∫ f_β φ̄ dA
  double distance = 0.0;            ///< ‖f_β − f‖₁
  double distance_error = 0.0;      ///< size of the neglected innermost |f_β| mass
  double outer_distance = 0.0;      ///< ∫ over D \ B(1, 0.1) of |f_β − f|, a lower bound
  double outer_mass = 0.0;          ///< ∫ over D \ B(1, 0.1) of |f_β|, → 0 as β ↓ −2
};

/// Radius of the disc about z = 1 left out of the lower-bound witness.
inline constexpr double kWitnessRadius = 0.1;

/// One row per β. Requires β ∈ (−2, −1.5], strictly descending.
std::vector<LognietRow> logniet_experiment(const std::vector<double>& beta_grid, const Logniet& f);

struct ShiftRatio {
  double norm_f = 0.0;   ///< ‖F‖₁
  double norm_zf = 0.0;  ///< ‖zF‖₁
  double ratio = 0.0;
};

/// ‖F‖₁/‖zF‖₁ by the tensor rule. Requires nonzero F of degree ≤ 10.
std::vector<ShiftRatio> shift_norm_equivalence(const std::vector<Polynomial>& polys, const discquad::DiscQuadrature& q);

}  // namespace bergman::extremal
