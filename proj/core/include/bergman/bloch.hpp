#pragma once

// Bloch norm ‖f‖_B = |f(0)| + sup (1 − |z|²)|f′(z)| and the distance of a
// projected symbol to the little Bloch space, read off the radial profile
// along the positive real axis.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "bergman/projection.hpp"

namespace bergman::bloch {

/// Sample grid for the sup: radii r_j = 1 − 10^{−4j/(R−1)} (so r_0 = 0 and the
/// outermost radius is 1 − 10⁻⁴) times equispaced angles.
struct SampleGrid {
  std::size_t radii = 64;
  std::size_t angles = 256;

  /// Throws DomainError for an empty grid.
  void validate() const;
  std::vector<double> radius_nodes() const;
};

/// One point (x, (1 − x²)|f′(x)|) of the radial profile.
struct ProfilePoint {
  double x = 0.0;
  double value = 0.0;
};

struct BlochEstimate {
  double norm = 0.0;
  double sampled_sup = 0.0;       ///< max of (1 − |z|²)|f′| over the grid
  double tail_uncertainty = 0.0;  ///< series input: truncation bound at the sup
  std::vector<ProfilePoint> radial_profile;
  double boundary_limsup = 0.0;
  double limsup_error = 0.0;
};

struct AnalyticFunction {
  std::function<std::complex<double>(std::complex<double>)> value;
  std::function<std::complex<double>(std::complex<double>)> derivative;
};

/// Profile points sit at x = 1 − 2^{−k}, k = 1..kMaxProfileLevel at most.
inline constexpr int kMaxProfileLevel = 40;

/// Norm from the series and its termwise derivative. The radial profile keeps
/// the levels at which the truncation bound is below 10⁻³ of the profile.
BlochEstimate bloch_norm(const projection::TaylorSeries& f, const SampleGrid& grid = {});

/// Norm of a callable; the radial profile uses every level up to
/// kMaxProfileLevel.
BlochEstimate bloch_norm(const AnalyticFunction& f, const SampleGrid& grid = {});

struct LittleBlochDistance {
  double estimate = 0.0;
  double expected = 0.0;  ///< (4/π)|sin(βπ/2)|/(β+2)
  double fit_error = 0.0;
  std::vector<ProfilePoint> profile;
};

/// Boundary limit of (1 − x²)|f′(x)| for f = Pφ_β, extrapolated from the
/// resolved profile levels by a least-squares fit of a + b·h + c·h·ln(1/h),
/// h = 1 − x, on the last four points.
///
/// Throws ResolutionError when fewer than six levels are resolved by the
/// series truncation; raise the series order in that case.
LittleBlochDistance little_bloch_distance(const projection::TaylorSeries& series, double beta);

/// (4/π)|sin(βπ/2)|/(β+2).
double expected_little_bloch_distance(double beta);

}  // namespace bergman::bloch
