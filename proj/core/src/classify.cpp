#include "bergman/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/bloch.hpp"
#include "bergman/errors.hpp"
#include "bergman/specfun.hpp"

namespace bergman::classify {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::StronglyExposed:
      return "StronglyExposed";
    case Verdict::NotStronglyExposed:
      return "NotStronglyExposed";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

DistanceBounds bounds_single(double beta) {
  if (!std::isfinite(beta) || beta < -2.0) throw DomainError("beta must be at least -2");
  DistanceBounds d;
  if (beta == -2.0) {
    d.lower = d.upper = 1.0;
    d.lower_source = d.upper_source = "phi_minus2_exact";
    d.verdict = Verdict::NotStronglyExposed;
    d.annotation = "symbol phi_-2 has no A1 function beneath it";
    return d;
  }
  const double s = std::abs(specfun::sin_half_pi(beta));
  const double denom = beta + 2.0;
  if (beta >= 0.0) {
    d.lower = 0.5 * s / denom;
    d.upper = 4.0 / kPi * s / denom;
    d.lower_source = "bloch_lower";
    d.upper_source = "bloch_upper";
    d.verdict = Verdict::StronglyExposed;
    return d;
  }
  d.lower = 2.0 / kPi * s / denom;
  d.lower_source = "negbeta_lower";
  d.conjectured = d.lower;
  if (beta > -1.0) {
    d.upper = s;
    d.upper_source = "sine_upper";
    d.verdict = Verdict::StronglyExposed;
  } else {
    d.upper = 1.0;
    d.upper_source = "trivial_upper";
    d.verdict = Verdict::Unknown;
  }
  // sin x < x keeps the lower bound below 1; clamp the last ulp near β = −2.
  d.lower = std::min(d.lower, d.upper);
  d.conjectured = std::min(*d.conjectured, d.upper);
  return d;
}

DistanceBounds bounds_product(const projection::PowerSymbol& symbol, bool with_outer_factor) {
  if (symbol.is_unchecked()) throw DomainError("bounds_product needs a validated symbol");
  DistanceBounds out;
  out.lower = 0.0;
  out.upper = 0.0;
  out.lower_source = out.upper_source = "constant_symbol";
  out.verdict = Verdict::StronglyExposed;
  bool any_unknown = false;
  bool all_strong = true;
  bool first = true;
  for (const auto& f : symbol.factors()) {
    const DistanceBounds b = bounds_single(f.exponent);
    if (first || b.lower > out.lower) {
      out.lower = b.lower;
      out.lower_source = b.lower_source;
    }
    if (first || b.upper > out.upper) {
      out.upper = b.upper;
      out.upper_source = b.upper_source;
    }
    first = false;
    any_unknown = any_unknown || b.verdict == Verdict::Unknown;
    all_strong = all_strong && b.verdict == Verdict::StronglyExposed;
  }
  out.verdict = all_strong ? Verdict::StronglyExposed : (any_unknown ? Verdict::Unknown : Verdict::NotStronglyExposed);
  std::ostringstream note;
  note << "max over " << symbol.factors().size() << " factor(s)";
  if (with_outer_factor) note << "; continuous zero-free outer factor accepted, distance unchanged";
  out.annotation = note.str();
  return out;
}

NumericLowerBound numeric_lower_bound(double beta, const projection::TaylorSeries& series) {
  if (!std::isfinite(beta) || beta < 0.0) throw DomainError("numeric_lower_bound needs beta >= 0");
  const auto single = bounds_single(beta);
  const auto measured = bloch::little_bloch_distance(series, beta);
  NumericLowerBound out;
  out.bloch_distance = measured.estimate;
  out.value = kPi / 8.0 * measured.estimate;
  out.closed_form_lower = single.lower;
  out.closed_form_upper = single.upper;
  out.consistent = out.value <= 1.05 * single.upper + 1e-9;
  return out;
}

}  // namespace bergman::classify
