#pragma once

// Interval bounds for d(φ, (A¹)^⊥ + C) and the strong-exposedness verdict
// they imply: f/‖f‖ is strongly exposed exactly when that distance is < 1.

#include <optional>
#include <string>

#include "bergman/projection.hpp"

namespace bergman::classify {

enum class Verdict { StronglyExposed, NotStronglyExposed, Unknown };

const char* to_string(Verdict v) noexcept;

struct DistanceBounds {
  double lower = 0.0;
  double upper = 1.0;
  std::string lower_source;
  std::string upper_source;
  std::optional<double> conjectured;  ///< (2/π)|sin(βπ/2)|/(β+2) on −2 < β < 0
  Verdict verdict = Verdict::Unknown;
  std::string annotation;  ///< free-form note, e.g. an outer factor that was accepted
};

/// Bounds for φ_β.
///   β ≥ 0:       [(1/2)|s|/(β+2), (4/π)|s|/(β+2)], strongly exposed
///   −1 < β < 0:  [(2/π)|s|/(β+2), |s|], strongly exposed
///   −2 < β ≤ −1: [(2/π)|s|/(β+2), 1], unknown
/// with s = sin(βπ/2). β = −2 gives the exact value 1 for φ₋₂ (not strongly
/// exposed); β < −2 throws DomainError.
DistanceBounds bounds_single(double beta);

/// Max-combination over the factors of a product symbol. A continuous
/// zero-free outer factor leaves the distance unchanged; pass
/// `with_outer_factor` to record it in the annotation.
DistanceBounds bounds_product(const projection::PowerSymbol& symbol, bool with_outer_factor = false);

struct NumericLowerBound {
  double value = 0.0;           ///< (π/8)·measured little-Bloch distance
  double bloch_distance = 0.0;  ///< the measured distance itself
  double closed_form_lower = 0.0;
  double closed_form_upper = 0.0;
  bool consistent = false;      ///< value ≤ 1.05·closed_form_upper
};

/// Lower bound on the distance from the measured distance of Pφ_β to the
/// little Bloch space, using ‖P*⁻¹‖ ≤ 8/π. Requires β ≥ 0 and a series from
/// projection::project(β, ·); propagates ResolutionError.
NumericLowerBound numeric_lower_bound(double beta, const projection::TaylorSeries& series);

}  // namespace bergman::classify
