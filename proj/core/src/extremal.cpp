#include "bergman/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/numerics.hpp"
#include "bergman/specfun.hpp"

namespace bergman::extremal {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_terms(std::size_t k_max, double clear) {
  if (k_max < 2 || static_cast<double>(k_max) < clear) {
    std::ostringstream os;
    os << "series truncation " << k_max << " is too small (need at least " << std::max(2.0, clear) << ")";
    throw DomainError(os.str());
  }
}

// z / log(1 − z); the quotient tends to −1 at z = 0 and is taken from the
// series there, since log|1 − z| has lost its relative accuracy.
std::complex<double> z_over_log(const discquad::DiscPoint& p) {
  const auto z = p.z;
  if (std::abs(z) < 1e-3) {
    std::complex<double> s = 1.0 / 6.0;
    for (int k = 5; k >= 1; --k) s = s * z + 1.0 / static_cast<double>(k);
    return -1.0 / s;
  }
  return z / p.log_w();
}

std::string describe_schedule(const discquad::DiscQuadrature& q) {
  std::ostringstream os;
  os << "punched polar rule about z=1 (angular " << q.angular_order << ", panel " << q.panel_order
     << "), Aitken extrapolation over " << q.epsilon_schedule.size() << " radii";
  if (!q.epsilon_schedule.empty()) {
    os << " from " << q.epsilon_schedule.front() << " to " << q.epsilon_schedule.back();
  }
  return os.str();
}

std::string describe_symbol(const projection::PowerSymbol& s) {
  std::ostringstream os;
  os << "g * conj(phi), phi = prod ((1 - z conj(z_i))/|1 - z conj(z_i)|)^beta_i with";
  if (s.factors().empty()) os << " no factors";
  for (const auto& f : s.factors()) {
    os << " (z_i=" << f.base.real() << (f.base.imag() < 0 ? "" : "+") << f.base.imag() << "i, beta_i=" << f.exponent
       << ")";
  }
  return os.str();
}

}  // namespace

const char* to_string(NormMethod m) noexcept {
  switch (m) {
    case NormMethod::series:
      return "series";
    case NormMethod::closed_form:
      return "closed_form";
    case NormMethod::quadrature:
      return "quadrature";
  }
  return "unknown";
}

NormResult power_norm_series(double beta, std::size_t k_max) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (!(beta > -2.0)) throw DivergenceError("the A1 norm of (1-z)^beta is infinite for beta <= -2", {});
  const double b = 0.5 * beta;
  require_terms(k_max, std::ceil(b) + 2.0);

  const auto a = specfun::binomial_series(b, k_max);
  CompensatedSum sum;
  for (std::size_t k = 0; k < k_max; ++k) sum.add(a[k] * a[k] / static_cast<double>(k + 1));

  specfun::SeriesSum tail;
  const auto inv = specfun::gamma_ratio({}, {-b});
  if (!inv.denominator_pole && inv.value != 0.0) {
    const double log_inv2 = 2.0 * std::log(std::abs(inv.value));
    const auto log_term = [b, log_inv2](double x) {
      return log_inv2 + specfun::log_gamma_difference(x, -b, 1.0) + specfun::log_gamma_difference(x, -b, 2.0);
    };
    tail = specfun::power_tail_sum(log_term, static_cast<double>(k_max), beta + 3.0);
  }
  NormResult out;
  out.method = NormMethod::series;
  out.value = sum.value() + tail.value;
  out.error_estimate = tail.error + 4.0 * kEps * out.value;
  return out;
}

NormResult power_norm_closed_form(double beta) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (!(beta > -2.0)) throw DivergenceError("the A1 norm of (1-z)^beta is infinite for beta <= -2", {});
  const double h = 0.5 * beta + 2.0;
  NormResult out;
  out.method = NormMethod::closed_form;
  out.value = specfun::gamma_ratio({beta + 2.0}, {h, h}).value;
  out.error_estimate = 1e-13 * out.value;
  return out;
}

NormResult power_norm_quadrature(double beta, const discquad::DiscQuadrature& q) {
  if (!std::isfinite(beta)) throw DomainError("beta must be finite");
  if (!(beta > -2.0)) throw DivergenceError("the A1 norm of (1-z)^beta is infinite for beta <= -2", {});
  const auto r = discquad::integrate_extrapolated(
      [beta](const discquad::DiscPoint& p) { return std::complex<double>(std::exp(beta * p.log_abs_w), 0.0); }, q);
  NormResult out;
  out.method = NormMethod::quadrature;
  out.value = r.value.real();
  out.error_estimate = r.error;
  return out;
}

std::vector<GnRow> g_n_limit_scan(const std::vector<std::size_t>& n_grid, std::size_t k_max) {
  std::vector<GnRow> rows;
  rows.reserve(n_grid.size());
  for (std::size_t n : n_grid) {
    if (n < 1) throw DomainError("g_n needs n >= 1");
    const double nd = static_cast<double>(n);
    const double delta = 1.0 / nd;
    const auto s = power_norm_series(-2.0 + delta, k_max);
    GnRow row;
    row.n = n;
    row.norm = s.value / nd;
    row.error_estimate = s.error_estimate / nd;
    const double h = 1.0 + 0.5 * delta;
    row.closed_form = specfun::gamma_ratio({delta}, {h, h}).value / nd;
    rows.push_back(row);
  }
  return rows;
}

FunctionalEvaluation exposing_functional(const discquad::Integrand& g, const projection::PowerSymbol& symbol,
                                         const discquad::DiscQuadrature& q) {
  const auto r = discquad::integrate_extrapolated(
      [&g, &symbol](const discquad::DiscPoint& p) { return g(p) * std::conj(symbol(p)); }, q);
  FunctionalEvaluation out;
  out.value = r.value;
  out.error = r.error;
  out.integrand = describe_symbol(symbol);
  out.provenance = describe_schedule(q);
  return out;
}

FunctionalEvaluation exposing_functional(const projection::TaylorSeries& g, const projection::PowerSymbol& symbol,
                                         const discquad::DiscQuadrature& q) {
  return exposing_functional([&g](const discquad::DiscPoint& p) { return g.value(p.z); }, symbol, q);
}

double negbeta_functional_series(double beta, std::size_t n, std::size_t k_max) {
  if (!std::isfinite(beta) || !(beta > -2.0) || !(beta < 0.0)) {
    throw DomainError("negbeta_functional_series needs -2 < beta < 0");
  }
  if (n < 1) throw DomainError("negbeta_functional_series needs n >= 1");
  require_terms(k_max, 2.0);
  const double b = 0.5 * beta;
  const double delta = 1.0 / static_cast<double>(n);
  const double s = 2.0 + b - delta;

  const auto A = specfun::binomial_series(-s, k_max);
  const auto B = specfun::binomial_series(b, k_max);
  CompensatedSum sum;
  for (std::size_t k = 0; k < k_max; ++k) sum.add(A[k] * B[k] / static_cast<double>(k + 1));

  // Both Γ(s) and Γ(−b) are positive on the admissible range.
  const double log_norm = specfun::log_gamma(s) + specfun::log_gamma(-b);
  const auto log_term = [s, b, log_norm](double x) {
    return specfun::log_gamma_difference(x, s, 1.0) + specfun::log_gamma_difference(x, -b, 2.0) - log_norm;
  };
  const auto tail = specfun::power_tail_sum(log_term, static_cast<double>(k_max), 1.0 + delta);
  return (sum.value() + tail.value) * delta;
}

double negbeta_limit(double beta) {
  if (!std::isfinite(beta) || !(beta > -2.0)) throw DomainError("beta must exceed -2");
  return 2.0 / std::numbers::pi * std::abs(specfun::sin_half_pi(beta)) / (beta + 2.0);
}

Logniet::Logniet(const discquad::DiscQuadrature& q) : q_(q), c_(1.0) {
  q_.validate();
  const auto mass = discquad::integrate_punched(
      [this](const discquad::DiscPoint& p) { return std::complex<double>(std::abs(value(p)), 0.0); }, q_, 0.0,
      [this](double arg_w, double floor) { return std::complex<double>(abs_tail(arg_w, floor), 0.0); });
  c_ = 1.0 / mass.real();
}

std::complex<double> Logniet::value(const discquad::DiscPoint& p) const {
  const auto zl = z_over_log(p);
  return c_ * zl * zl / (p.w * p.w);
}

std::complex<double> Logniet::conj_symbol(const discquad::DiscPoint& p) const {
  const auto zl = z_over_log(p);
  const auto u = zl * zl / (p.w * p.w);
  return std::conj(u) / std::abs(u);
}

double Logniet::abs_tail(double arg_w, double log_rho_floor) const {
  // ∫_T^∞ du/(u² + θ²) with u = −ln ρ, T = −ln ρ_floor; |z| = 1 to within ρ.
  const double t = -log_rho_floor;
  const double theta = std::abs(arg_w);
  if (theta < 1e-8 * t) return c_ / t;
  return c_ * std::atan(theta / t) / theta;
}

std::vector<LognietRow> logniet_experiment(const std::vector<double>& beta_grid, const Logniet& f) {
  for (std::size_t i = 0; i < beta_grid.size(); ++i) {
    const double b = beta_grid[i];
    if (!std::isfinite(b) || !(b > -2.0) || !(b <= -1.5)) throw DomainError("logniet grid must lie in (-2, -1.5]");
    if (i > 0 && !(b < beta_grid[i - 1])) throw DomainError("logniet grid must be strictly descending");
  }
  const auto& q = f.rule();
  std::vector<LognietRow> rows;
  for (double beta : beta_grid) {
    const double cb = 1.0 / power_norm_closed_form(beta).value;
    const auto fb = [beta, cb](const discquad::DiscPoint& p) { return cb * std::exp(beta * p.log_w()); };

    LognietRow row;
    row.beta = beta;

    // Inside ρ_floor: f_β ≈ c_β ρ^β e^{iβθ}, conj(φ) ≈ e^{2iθ}·L/L̄ with
    // L = log(1 − z) frozen at the floor.
    const auto pair_tail = [beta, cb](double arg_w, double floor) {
      const std::complex<double> L(floor, arg_w);
      const double mass = std::exp((beta + 2.0) * floor) / (beta + 2.0);
      return cb * mass * std::polar(1.0, (beta + 2.0) * arg_w) * (L / std::conj(L));
    };
    row.functional = discquad::integrate_punched(
        [&](const discquad::DiscPoint& p) { return fb(p) * f.conj_symbol(p); }, q, 0.0, pair_tail);

    const auto diff = [&](const discquad::DiscPoint& p) { return std::complex<double>(std::abs(fb(p) - f.value(p)), 0.0); };
    row.distance = discquad::integrate_punched(diff, q, 0.0, [&f](double arg_w, double floor) {
                     return std::complex<double>(f.abs_tail(arg_w, floor), 0.0);
                   }).real();
    row.distance_error = cb * std::exp((beta + 2.0) * q.log_rho_floor) / (beta + 2.0);
    row.outer_distance = discquad::integrate_punched(diff, q, kWitnessRadius).real();
    row.outer_mass = discquad::integrate_punched(
                         [&](const discquad::DiscPoint& p) { return std::complex<double>(std::abs(fb(p)), 0.0); }, q,
                         kWitnessRadius)
                         .real();
    rows.push_back(row);
  }
  return rows;
}

std::vector<ShiftRatio> shift_norm_equivalence(const std::vector<Polynomial>& polys, const discquad::DiscQuadrature& q) {
  discquad::DiscQuadrature rule = q;
  rule.exclusion_radius = 0.0;
  std::vector<ShiftRatio> out;
  out.reserve(polys.size());
  for (const auto& F : polys) {
    if (F.degree() > 10) throw DomainError("shift_norm_equivalence needs deg F <= 10");
    bool nonzero = false;
    for (const auto& c : F.coeffs) nonzero = nonzero || c != 0.0;
    if (!nonzero) throw DomainError("shift_norm_equivalence needs nonzero polynomials");
    ShiftRatio r;
    r.norm_f = discquad::integrate([&F](const discquad::DiscPoint& p) { return std::complex<double>(std::abs(F(p.z)), 0.0); },
                                   rule)
                   .real();
    r.norm_zf = discquad::integrate(
                    [&F](const discquad::DiscPoint& p) { return std::complex<double>(p.r * std::abs(F(p.z)), 0.0); }, rule)
                    .real();
    r.ratio = r.norm_f / r.norm_zf;
    out.push_back(r);
  }
  return out;
}

}  // namespace bergman::extremal
