#include "bergman/bloch.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/specfun.hpp"

namespace bergman::bloch {
namespace {

constexpr double kResolvedFraction = 1e-3;
constexpr std::size_t kFitPoints = 4;
constexpr std::size_t kMinResolvedLevels = 6;

struct Fit {
  double limit = 0.0;
  double residual = 0.0;
};

// Least squares for value ≈ a + b·h + c·h·ln(1/h) by modified Gram–Schmidt on
// column-scaled data; returns a and the RMS residual.
Fit fit_boundary_limit(const std::vector<ProfilePoint>& pts) {
  const std::size_t m = pts.size();
  std::vector<std::array<double, 3>> cols(m);
  std::vector<double> y(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double h = 1.0 - pts[i].x;
    cols[i] = {1.0, h, h * std::log(1.0 / h)};
    y[i] = pts[i].value;
  }
  std::array<double, 3> scale{};
  for (int j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < m; ++i) scale[j] = std::max(scale[j], std::abs(cols[i][j]));
    for (std::size_t i = 0; i < m; ++i) cols[i][j] /= scale[j];
  }

  std::array<std::array<double, 3>, 3> r{};
  std::vector<std::array<double, 3>> qm = cols;
  std::array<double, 3> qty{};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < m; ++i) dot += qm[i][k] * qm[i][j];
      r[k][j] = dot;
      for (std::size_t i = 0; i < m; ++i) qm[i][j] -= dot * qm[i][k];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) norm += qm[i][j] * qm[i][j];
    norm = std::sqrt(norm);
    r[j][j] = norm;
    for (std::size_t i = 0; i < m; ++i) qm[i][j] /= norm;
    for (std::size_t i = 0; i < m; ++i) qty[j] += qm[i][j] * y[i];
  }
  std::array<double, 3> coef{};
  for (int j = 2; j >= 0; --j) {
    double s = qty[j];
    for (int k = j + 1; k < 3; ++k) s -= r[j][k] * coef[k];
    coef[j] = s / r[j][j];
  }

  Fit out;
  out.limit = coef[0] / scale[0];
  double ss = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double model = 0.0;
    for (int j = 0; j < 3; ++j) model += coef[j] * cols[i][j];
    ss += (model - y[i]) * (model - y[i]);
  }
  out.residual = std::sqrt(ss / static_cast<double>(m));
  return out;
}

double level_x(int k) { return 1.0 - std::ldexp(1.0, -k); }

// (1 − x²) computed as h(2 − h) so that it keeps full precision near x = 1.
double one_minus_square(double x) {
  const double h = 1.0 - x;
  return h * (2.0 - h);
}

template <class Deriv>
double sampled_sup(const SampleGrid& grid, Deriv&& deriv, double* at_radius) {
  grid.validate();
  const auto radii = grid.radius_nodes();
  const double dtheta = 2.0 * std::numbers::pi / static_cast<double>(grid.angles);
  double best = 0.0;
  double best_r = 0.0;
  for (double r : radii) {
    const double w = one_minus_square(r);
    for (std::size_t k = 0; k < grid.angles; ++k) {
      const double v = w * std::abs(deriv(std::polar(r, dtheta * static_cast<double>(k))));
      if (v > best) {
        best = v;
        best_r = r;
      }
    }
  }
  if (at_radius) *at_radius = best_r;
  return best;
}

void attach_limsup(BlochEstimate& e) {
  const auto& prof = e.radial_profile;
  if (prof.size() >= kFitPoints) {
    const std::vector<ProfilePoint> last(prof.end() - kFitPoints, prof.end());
    const Fit fit = fit_boundary_limit(last);
    e.boundary_limsup = std::max(fit.limit, 0.0);
    e.limsup_error = fit.residual + std::max(-fit.limit, 0.0);
  } else if (!prof.empty()) {
    e.boundary_limsup = prof.back().value;
    e.limsup_error = prof.back().value;
  }
}

// Levels k with (1 + x)·B·x^N ≤ 10⁻³·profile(x); stops at the first failure.
std::vector<ProfilePoint> resolved_profile(const projection::TaylorSeries& f) {
  std::vector<ProfilePoint> prof;
  for (int k = 1; k <= kMaxProfileLevel; ++k) {
    const double x = level_x(k);
    const double value = one_minus_square(x) * std::abs(f.derivative(x));
    const double tail = (1.0 + x) * f.tail_bound * std::pow(x, static_cast<double>(f.order()));
    if (tail > kResolvedFraction * value) break;
    prof.push_back({x, value});
  }
  return prof;
}

}  // namespace

void SampleGrid::validate() const {
  if (radii == 0 || angles == 0) throw DomainError("Bloch sample grid is empty");
}

std::vector<double> SampleGrid::radius_nodes() const {
  validate();
  std::vector<double> out(radii, 0.0);
  if (radii == 1) return out;
  for (std::size_t j = 0; j < radii; ++j) {
    out[j] = 1.0 - std::pow(10.0, -4.0 * static_cast<double>(j) / static_cast<double>(radii - 1));
  }
  return out;
}

BlochEstimate bloch_norm(const projection::TaylorSeries& f, const SampleGrid& grid) {
  BlochEstimate e;
  double r_star = 0.0;
  e.sampled_sup = sampled_sup(grid, [&f](std::complex<double> z) { return f.derivative(z); }, &r_star);
  e.tail_uncertainty = one_minus_square(r_star) * f.derivative_tail(r_star);
  e.radial_profile = resolved_profile(f);
  attach_limsup(e);
  const double f0 = f.coeffs.empty() ? 0.0 : std::abs(f.coeffs[0]);
  e.norm = f0 + std::max(e.sampled_sup, e.boundary_limsup);
  return e;
}

BlochEstimate bloch_norm(const AnalyticFunction& f, const SampleGrid& grid) {
  if (!f.value || !f.derivative) throw DomainError("analytic function needs value and derivative");
  BlochEstimate e;
  e.sampled_sup = sampled_sup(grid, f.derivative, nullptr);
  for (int k = 1; k <= kMaxProfileLevel; ++k) {
    const double x = level_x(k);
    e.radial_profile.push_back({x, one_minus_square(x) * std::abs(f.derivative(x))});
  }
  attach_limsup(e);
  e.norm = std::abs(f.value(0.0)) + std::max(e.sampled_sup, e.boundary_limsup);
  return e;
}

double expected_little_bloch_distance(double beta) {
  if (!std::isfinite(beta) || !(beta > -2.0)) throw DomainError("beta must exceed -2");
  return 4.0 / std::numbers::pi * std::abs(specfun::sin_half_pi(beta)) / (beta + 2.0);
}

LittleBlochDistance little_bloch_distance(const projection::TaylorSeries& series, double beta) {
  LittleBlochDistance out;
  out.expected = expected_little_bloch_distance(beta);
  out.profile = resolved_profile(series);
  if (out.profile.size() < kMinResolvedLevels) {
    std::ostringstream os;
    os << "insufficient resolution: series order " << series.order() << " resolves only "
       << out.profile.size() << " profile levels (need " << kMinResolvedLevels
       << "); raise the series order";
    throw ResolutionError(os.str());
  }
  const std::vector<ProfilePoint> last(out.profile.end() - kFitPoints, out.profile.end());
  const Fit fit = fit_boundary_limit(last);
  out.estimate = std::max(fit.limit, 0.0);
  out.fit_error = fit.residual;
  return out;
}

}  // namespace bergman::bloch
