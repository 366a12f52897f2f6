#pragma once

// Quadrature over the unit disc D with the normalized area measure
// dA = (1/π) r dr dθ.
//
// Two rules are provided. `integrate` is a tensor rule centred at the origin
// (Gauss–Legendre in r, trapezoid in θ) for integrands that are smooth on the
// closed disc. `integrate_punched` and `integrate_extrapolated` use polar
// coordinates about the boundary point z = 1, z = 1 + ρ e^{iψ}, with
// Gauss–Legendre panels in ln ρ; they handle integrands whose only
// singularity sits at z = 1.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace bergman::discquad {

/// A quadrature node. `w = 1 − z` is carried separately from `z`, together
/// with ln|w| and arg w, because for nodes close to z = 1 the difference
/// 1 − z cannot be recovered from z in floating point.
struct DiscPoint {
  std::complex<double> z;
  std::complex<double> w;   ///< 1 − z
  double log_abs_w = 0.0;   ///< ln|1 − z|
  double arg_w = 0.0;       ///< principal arg(1 − z), in (−π/2, π/2) on D
  double r = 0.0;           ///< |z|
  double theta = 0.0;       ///< arg z in [0, 2π)

  /// Principal log(1 − z).
  std::complex<double> log_w() const { return {log_abs_w, arg_w}; }
};

/// Builds the node description from polar coordinates about the origin.
DiscPoint point_from_polar(double r, double theta);

/// Builds the node description from polar coordinates about z = 1:
/// 1 − z = e^{log_rho + i·arg_w}.
DiscPoint point_from_singular(double log_rho, double arg_w);

/// One evaluated node, used when reporting bad samples.
struct IntegrandSample {
  std::complex<double> value;
  double r = 0.0;
  double theta = 0.0;
};

using Integrand = std::function<std::complex<double>(const DiscPoint&)>;

/// ∫_0^{ρ_floor} f ρ dρ along the ray 1 − z = ρ e^{i·arg_w}; receives
/// (arg_w, ln ρ_floor). Used to add back what the ε = 0 rule cuts off.
using RadialTail = std::function<std::complex<double>(double arg_w, double log_rho_floor)>;

/// Default dyadic schedule 2^{-3}, ..., 2^{-12}.
std::vector<double> default_epsilon_schedule();

struct DiscQuadrature {
  std::size_t radial_order = 96;    ///< Gauss–Legendre nodes in r (tensor rule)
  std::size_t angular_order = 384;  ///< trapezoid nodes in θ; also angular nodes of the z=1 rule
  double exclusion_radius = 0.0;    ///< nodes with |z − 1| < ε are dropped by `integrate`
  std::vector<double> epsilon_schedule = default_epsilon_schedule();
  std::size_t panel_order = 16;     ///< Gauss–Legendre nodes per ln ρ panel (z=1 rule)
  double log_rho_floor = -230.0;    ///< innermost ln ρ reached by the ε = 0 rule

  /// Throws DomainError when an order is zero, ε ∉ [0, 1), or the schedule is
  /// not strictly decreasing and positive.
  void validate() const;
};

/// Tensor-rule approximation of ∫_{D \ B(1, ε)} f dA, ε = q.exclusion_radius.
/// Node order is fixed and summation compensated, so results are
/// bit-reproducible for a given rule. A NaN/Inf sample throws
/// NonFiniteSampleError carrying the node location.
std::complex<double> integrate(const Integrand& f, const DiscQuadrature& q);

/// ∫_{D \ B(1, ε)} f dA with the polar rule about z = 1. For ε = 0 the rule
/// stops at ρ = e^{q.log_rho_floor}; the optional tail supplies the rest.
std::complex<double> integrate_punched(const Integrand& f, const DiscQuadrature& q, double epsilon,
                                       const RadialTail& tail = {});

struct ExtrapolatedIntegral {
  std::complex<double> value;
  double error = 0.0;                         ///< estimated |value − limit|
  double observed_order = 0.0;                ///< fitted p in I(ε) − I(0) ~ ε^p
  std::vector<std::complex<double>> sequence; ///< I(ε) over the schedule
};

/// Evaluates I(ε) = integrate_punched(f, q, ε) along q.epsilon_schedule and
/// extrapolates ε → 0 by iterated Aitken Δ², which removes successive
/// components C ε^p with p fitted from the data. Throws DivergenceError
/// with the raw sequence when the differences fail to contract.
ExtrapolatedIntegral integrate_extrapolated(const Integrand& f, const DiscQuadrature& q);

/// moments[n][m] = ∫ z^n z̄^m dA for n ≤ n_max, m ≤ m_max, by the tensor rule.
/// Requires q.exclusion_radius = 0.
std::vector<std::vector<std::complex<double>>> monomial_moments(std::size_t n_max, std::size_t m_max,
                                                                const DiscQuadrature& q);

}  // namespace bergman::discquad
