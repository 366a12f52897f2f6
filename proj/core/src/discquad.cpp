#include "bergman/discquad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/numerics.hpp"

namespace bergman::discquad {
namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
  theta = std::fmod(theta, 2.0 * kPi);
  return theta < 0.0 ? theta + 2.0 * kPi : theta;
}

std::complex<double> checked(const Integrand& f, const DiscPoint& p) {
  const std::complex<double> v = f(p);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at r=" << p.r << ", theta=" << p.theta;
    throw NonFiniteSampleError(os.str(), p.r, p.theta);
  }
  return v;
}

// Breakpoints in ln ρ from ln ρ_max down to ln ρ_min: narrow panels near the
// far boundary, dyadic panels below, then wide panels towards the floor.
std::vector<double> radial_breakpoints(double log_max, double log_min) {
  std::vector<double> b{log_max};
  const double ln2 = std::numbers::ln2;
  auto push = [&](double step) {
    const double next = b.back() - step;
    b.push_back(std::max(next, log_min));
    return b.back() > log_min;
  };
  for (int i = 0; i < 4; ++i) {
    if (!push(0.5 * ln2)) return b;
  }
  for (int i = 0; i < 6; ++i) {
    if (!push(ln2)) return b;
  }
  while (push(2.0)) {
  }
  return b;
}

}  // namespace

DiscPoint point_from_polar(double r, double theta) {
  DiscPoint p;
  p.z = std::polar(r, theta);
  p.w = 1.0 - p.z;
  p.log_abs_w = std::log(std::abs(p.w));
  p.arg_w = std::arg(p.w);
  p.r = r;
  p.theta = wrap_angle(theta);
  return p;
}

DiscPoint point_from_singular(double log_rho, double arg_w) {
  DiscPoint p;
  p.w = std::polar(std::exp(log_rho), arg_w);
  p.z = 1.0 - p.w;
  p.log_abs_w = log_rho;
  p.arg_w = arg_w;
  p.r = std::abs(p.z);
  p.theta = wrap_angle(std::arg(p.z));
  return p;
}

std::vector<double> default_epsilon_schedule() {
  std::vector<double> s;
  for (int k = 3; k <= 12; ++k) s.push_back(std::ldexp(1.0, -k));
  return s;
}

void DiscQuadrature::validate() const {
  if (radial_order == 0 || angular_order == 0 || panel_order == 0) {
    throw DomainError("quadrature orders must be positive");
  }
  if (!(exclusion_radius >= 0.0) || !(exclusion_radius < 1.0)) {
    throw DomainError("exclusion radius must lie in [0, 1)");
  }
  if (!(log_rho_floor < 0.0) || log_rho_floor < -700.0) {
    throw DomainError("log_rho_floor must lie in [-700, 0)");
  }
  for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) {
    const double e = epsilon_schedule[i];
    if (!(e > 0.0) || !(e < 1.0)) throw DomainError("epsilon schedule entries must lie in (0, 1)");
    if (i > 0 && !(e < epsilon_schedule[i - 1])) {
      throw DomainError("epsilon schedule must be strictly decreasing");
    }
  }
}

std::complex<double> integrate(const Integrand& f, const DiscQuadrature& q) {
  q.validate();
  const auto rule = gauss_legendre(q.radial_order);
  const double eps = q.exclusion_radius;
  const double dtheta = 2.0 * kPi / static_cast<double>(q.angular_order);
  const double wtheta = 1.0 / static_cast<double>(q.angular_order);

  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < q.radial_order; ++i) {
    const double r = 0.5 * (rule.nodes[i] + 1.0);
    // 2r dr on [0, 1] with dr = dx/2.
    const double wr = r * rule.weights[i];
    for (std::size_t k = 0; k < q.angular_order; ++k) {
      const DiscPoint p = point_from_polar(r, dtheta * static_cast<double>(k));
      if (eps > 0.0 && std::abs(p.w) < eps) continue;
      acc.add(checked(f, p) * (wr * wtheta));
    }
  }
  return acc.value();
}

std::complex<double> integrate_punched(const Integrand& f, const DiscQuadrature& q, double epsilon,
                                       const RadialTail& tail) {
  q.validate();
  if (!(epsilon >= 0.0) || !(epsilon < 2.0)) throw DomainError("punch radius must lie in [0, 2)");

  // The ray 1 − z = ρ e^{i(ψ−π)} stays in D for ρ < −2 cos ψ, ψ ∈ (π/2, 3π/2).
  const double psi_lo = epsilon > 0.0 ? std::acos(-0.5 * epsilon) : 0.5 * kPi;
  const double psi_hi = 2.0 * kPi - psi_lo;
  const double log_min = epsilon > 0.0 ? std::log(epsilon) : q.log_rho_floor;

  const auto angular = gauss_legendre(q.angular_order);
  const auto radial = gauss_legendre(q.panel_order);

  ComplexCompensatedSum total;
  for (std::size_t j = 0; j < q.angular_order; ++j) {
    // Sidi sin-transform clusters nodes at both ends of the angular interval,
    // where ρ_max → 0 and the radial integral has an algebraic endpoint.
    const double t = 0.5 * (angular.nodes[j] + 1.0);
    const double s = t - std::sin(2.0 * kPi * t) / (2.0 * kPi);
    const double ds = 1.0 - std::cos(2.0 * kPi * t);
    const double psi = psi_lo + (psi_hi - psi_lo) * s;
    const double wpsi = (psi_hi - psi_lo) * ds * 0.5 * angular.weights[j];
    const double rho_max = -2.0 * std::cos(psi);
    if (!(rho_max > 0.0)) continue;
    const double log_max = std::log(rho_max);
    if (!(log_max > log_min)) continue;
    const double arg_w = psi - kPi;

    ComplexCompensatedSum ray;
    const auto breaks = radial_breakpoints(log_max, log_min);
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
      const double hi = breaks[b];
      const double lo = breaks[b + 1];
      const double half = 0.5 * (hi - lo);
      const double mid = 0.5 * (hi + lo);
      for (std::size_t i = 0; i < q.panel_order; ++i) {
        const double log_rho = mid + half * radial.nodes[i];
        const DiscPoint p = point_from_singular(log_rho, arg_w);
        // ρ dρ = ρ² d(ln ρ).
        ray.add(checked(f, p) * (half * radial.weights[i] * std::exp(2.0 * log_rho)));
      }
    }
    if (epsilon == 0.0 && tail) ray.add(tail(arg_w, log_min));
    total.add(ray.value() * wpsi);
  }
  return total.value() / kPi;
}

ExtrapolatedIntegral integrate_extrapolated(const Integrand& f, const DiscQuadrature& q) {
  q.validate();
  if (q.epsilon_schedule.size() < 3) throw DomainError("epsilon schedule needs at least 3 entries");

  ExtrapolatedIntegral out;
  for (double eps : q.epsilon_schedule) out.sequence.push_back(integrate_punched(f, q, eps));
  const auto& seq = out.sequence;
  const std::size_t n = seq.size();

  double scale = 0.0;
  for (const auto& v : seq) scale = std::max(scale, std::abs(v));
  const double noise = 1e-14 * std::max(scale, 1e-300);

  const double d_last = std::abs(seq[n - 1] - seq[n - 2]);
  const double d_prev = std::abs(seq[n - 2] - seq[n - 3]);
  if (d_last <= noise) {
    out.value = seq.back();
    out.error = std::max(d_last, d_prev);
    out.observed_order = 0.0;
    return out;
  }
  const double eps_ratio = q.epsilon_schedule[n - 2] / q.epsilon_schedule[n - 1];
  out.observed_order = std::log(d_prev / d_last) / std::log(eps_ratio);
  if (!(d_last < d_prev * (1.0 - 1e-3))) {
    throw DivergenceError("punched-disc integrals do not converge as epsilon -> 0", out.sequence);
  }

  // Iterated Aitken Δ²; each level removes one geometric component.
  std::vector<std::vector<std::complex<double>>> levels{seq};
  while (levels.size() < 4 && levels.back().size() >= 3) {
    const auto& x = levels.back();
    std::vector<std::complex<double>> next;
    for (std::size_t j = 0; j + 2 < x.size(); ++j) {
      const auto d0 = x[j + 1] - x[j];
      const auto d1 = x[j + 2] - x[j + 1];
      const auto den = d1 - d0;
      if (std::abs(d1) <= noise || std::abs(den) <= 1e-3 * std::abs(d1)) {
        next.push_back(x[j + 2]);
      } else {
        next.push_back(x[j + 2] - d1 * d1 / den);
      }
    }
    levels.push_back(std::move(next));
  }
  const auto& deepest = levels.back();
  const auto& previous = levels[levels.size() - 2];
  out.value = deepest.back();
  out.error = std::abs(deepest.back() - previous.back());
  if (deepest.size() >= 2) out.error += std::abs(deepest.back() - deepest[deepest.size() - 2]);
  out.error = std::max(out.error, noise);
  return out;
}

std::vector<std::vector<std::complex<double>>> monomial_moments(std::size_t n_max, std::size_t m_max,
                                                                const DiscQuadrature& q) {
  q.validate();
  if (q.exclusion_radius != 0.0) throw DomainError("monomial_moments requires exclusion_radius = 0");
  const auto rule = gauss_legendre(q.radial_order);
  const double dtheta = 2.0 * kPi / static_cast<double>(q.angular_order);
  const double wtheta = 1.0 / static_cast<double>(q.angular_order);

  std::vector<std::vector<ComplexCompensatedSum>> acc(n_max + 1,
                                                      std::vector<ComplexCompensatedSum>(m_max + 1));
  std::vector<std::complex<double>> zp(n_max + 1);
  std::vector<std::complex<double>> zbp(m_max + 1);
  for (std::size_t i = 0; i < q.radial_order; ++i) {
    const double r = 0.5 * (rule.nodes[i] + 1.0);
    const double wr = r * rule.weights[i] * wtheta;
    for (std::size_t k = 0; k < q.angular_order; ++k) {
      const auto z = std::polar(r, dtheta * static_cast<double>(k));
      zp[0] = 1.0;
      for (std::size_t a = 1; a <= n_max; ++a) zp[a] = zp[a - 1] * z;
      zbp[0] = 1.0;
      for (std::size_t b = 1; b <= m_max; ++b) zbp[b] = zbp[b - 1] * std::conj(z);
      for (std::size_t a = 0; a <= n_max; ++a) {
        for (std::size_t b = 0; b <= m_max; ++b) acc[a][b].add(zp[a] * zbp[b] * wr);
      }
    }
  }
  std::vector<std::vector<std::complex<double>>> out(n_max + 1, std::vector<std::complex<double>>(m_max + 1));
  for (std::size_t a = 0; a <= n_max; ++a) {
    for (std::size_t b = 0; b <= m_max; ++b) out[a][b] = acc[a][b].value();
  }
  return out;
}

}  // namespace bergman::discquad
