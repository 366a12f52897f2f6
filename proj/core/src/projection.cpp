#include "bergman/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/numerics.hpp"
#include "bergman/specfun.hpp"

namespace bergman::projection {
namespace {

constexpr double kUnimodularTolerance = 1e-12;
constexpr double kTargetRelativeError = 1e-12;
constexpr std::size_t kMinInnerTerms = 2000;

void require_beta(double beta) {
  if (!std::isfinite(beta) || !(beta > -2.0)) throw DomainError("beta must exceed -2");
}

bool is_even_nonnegative(double beta) { return specfun::is_pole(-0.5 * beta); }

// Binomial tables for (1−w)^{β/2} and (1−w̄)^{−β/2}, grown on demand so that
// project() can reuse them across every coefficient.
class SeriesWorkspace {
 public:
  explicit SeriesWorkspace(double beta)
      : a_half_(0.5 * beta), prefactor_(specfun::gamma_ratio({}, {-a_half_, a_half_})) {}

  double a_half() const { return a_half_; }
  const specfun::GammaRatio& prefactor() const { return prefactor_; }

  void reserve(std::size_t order) {
    if (holo_.coeffs.size() > order) return;
    const std::size_t grown = std::max(order, 2 * holo_.coeffs.size());
    holo_ = specfun::binomial_series(a_half_, grown);
    anti_ = specfun::binomial_series(-a_half_, grown);
  }

  double holo(std::size_t m) const { return holo_[m]; }
  double anti(std::size_t m) const { return anti_[m]; }

 private:
  double a_half_;
  specfun::GammaRatio prefactor_;
  specfun::BinomialCoefficientTable holo_;
  specfun::BinomialCoefficientTable anti_;
};

std::size_t initial_terms(double a_half, std::size_t n, std::size_t cap) {
  // The terms change shape around m ≈ n, so the Euler–Maclaurin start has to
  // sit well beyond it; it must also clear the last sign change at m ≈ a − n.
  std::size_t k = std::max<std::size_t>(kMinInnerTerms, 30 * (n + 1));
  const double clear = std::ceil(a_half) + 2.0;
  if (clear > static_cast<double>(k)) k = static_cast<std::size_t>(clear);
  if (cap < k) {
    if (static_cast<double>(cap) < clear || cap < 2) {
      std::ostringstream os;
      os << "inner truncation " << cap << " too small for beta=" << 2.0 * a_half;
      throw DomainError(os.str());
    }
    k = cap;
  }
  return k;
}

SeriesCoefficient series_from_workspace(SeriesWorkspace& ws, std::size_t n, std::size_t cap) {
  const double a = ws.a_half();
  const double nd = static_cast<double>(n);
  SeriesCoefficient out;
  out.even_degenerate = is_even_nonnegative(2.0 * a);

  std::size_t k_end = initial_terms(a, n, cap);
  CompensatedSum explicit_sum;
  std::size_t k = 0;
  for (;;) {
    ws.reserve(k_end + n);
    for (; k < k_end; ++k) {
      explicit_sum.add(ws.holo(k + n) * ws.anti(k) / static_cast<double>(k + n + 1));
    }

    specfun::SeriesSum tail;
    const auto& pref = ws.prefactor();
    if (!pref.denominator_pole && pref.value != 0.0) {
      const double log_pref = std::log(std::abs(pref.value));
      const auto log_term = [a, nd, log_pref](double x) {
        return log_pref + specfun::log_gamma_difference(x, nd - a, nd + 2.0) +
               specfun::log_gamma_difference(x, a, 1.0);
      };
      tail = specfun::power_tail_sum(log_term, static_cast<double>(k_end), 3.0);
      if (pref.value < 0.0) tail.value = -tail.value;
    }

    const double inner = explicit_sum.value() + tail.value;
    const double roundoff = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(inner);
    out.value = (nd + 1.0) * inner;
    out.error = (nd + 1.0) * (tail.error + roundoff);
    out.terms = k_end;
    if (out.error <= kTargetRelativeError * std::abs(out.value) || k_end >= cap) break;
    k_end = std::min(cap, 2 * k_end);
  }
  return out;
}

// B = sup_{n>N} n|c_n| from c_n = (n+1)/(Γ(−a)Γ(2+a)(n−a)(n+1−a)).
// Past n = a + 1 the factor n(n+1)/((n−a)(n+1−a)) is monotone with limit 1.
double tail_bound(double beta, std::size_t order) {
  const double a = 0.5 * beta;
  const auto lead = specfun::gamma_ratio({}, {-a, 2.0 + a});
  if (lead.denominator_pole || lead.value == 0.0) return 0.0;
  const double c = std::abs(lead.value);
  auto scaled = [a, c](double n) { return c * n * (n + 1.0) / std::abs((n - a) * (n + 1.0 - a)); };

  double bound = c;
  double n = static_cast<double>(order) + 1.0;
  for (; n <= a + 1.0; n += 1.0) bound = std::max(bound, scaled(n));
  return std::max(bound, scaled(n));
}

}  // namespace

PowerSymbol::PowerSymbol(std::vector<SymbolFactor> factors) : factors_(std::move(factors)) {
  validate(factors_, true);
}

PowerSymbol PowerSymbol::single(double beta) { return PowerSymbol({SymbolFactor{{1.0, 0.0}, beta}}); }

PowerSymbol PowerSymbol::unchecked(std::vector<SymbolFactor> factors) {
  validate(factors, false);
  PowerSymbol s;
  s.factors_ = std::move(factors);
  s.unchecked_ = true;
  return s;
}

void PowerSymbol::validate(const std::vector<SymbolFactor>& factors, bool check_exponents) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    if (std::abs(std::abs(f.base) - 1.0) > kUnimodularTolerance) {
      throw DomainError("symbol base points must lie on the unit circle");
    }
    if (!std::isfinite(f.exponent)) throw DomainError("symbol exponents must be finite");
    if (check_exponents && !(f.exponent > -2.0)) throw DomainError("beta must exceed -2");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(factors[j].base - f.base) <= kUnimodularTolerance) {
        throw DomainError("symbol base points must be distinct");
      }
    }
  }
}

std::complex<double> PowerSymbol::operator()(const discquad::DiscPoint& p) const {
  double phase = 0.0;
  for (const auto& f : factors_) {
    const double arg = f.base == std::complex<double>(1.0, 0.0) ? p.arg_w : std::arg(1.0 - p.z * std::conj(f.base));
    phase += f.exponent * arg;
  }
  return std::polar(1.0, phase);
}

std::complex<double> TaylorSeries::value(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> TaylorSeries::derivative(std::complex<double> z) const {
  std::complex<double> acc = 0.0;
  for (std::size_t n = coeffs.size(); n-- > 1;) acc = acc * z + static_cast<double>(n) * coeffs[n];
  return acc;
}

double TaylorSeries::derivative_tail(double r) const {
  if (!(r >= 0.0) || !(r < 1.0)) throw DomainError("derivative_tail needs 0 <= r < 1");
  if (tail_bound == 0.0) return 0.0;
  return tail_bound * std::pow(r, static_cast<double>(order())) / (1.0 - r);
}

SeriesCoefficient coefficient_series(double beta, std::size_t n, std::size_t inner_cap) {
  require_beta(beta);
  SeriesWorkspace ws(beta);
  return series_from_workspace(ws, n, inner_cap);
}

discquad::ExtrapolatedIntegral coefficient_quadrature(const PowerSymbol& symbol, std::size_t n,
                                                      const discquad::DiscQuadrature& q) {
  const int power = static_cast<int>(n);
  auto integrand = [&symbol, power](const discquad::DiscPoint& p) {
    return symbol(p) * std::pow(std::conj(p.z), power);
  };
  auto result = discquad::integrate_extrapolated(integrand, q);
  const double scale = static_cast<double>(n) + 1.0;
  result.value *= scale;
  result.error *= scale;
  for (auto& v : result.sequence) v *= scale;
  return result;
}

TaylorSeries project(double beta, std::size_t order, std::size_t inner_cap) {
  require_beta(beta);
  if (order < 1) throw DomainError("series order must be at least 1");
  SeriesWorkspace ws(beta);
  TaylorSeries out;
  out.coeffs.resize(order + 1);
  for (std::size_t n = 0; n <= order; ++n) out.coeffs[n] = series_from_workspace(ws, n, inner_cap).value;
  out.tail_bound = tail_bound(beta, order);
  return out;
}

std::complex<double> kernel_eval(const discquad::Integrand& f, std::complex<double> z,
                                 const discquad::DiscQuadrature& q) {
  if (!(std::abs(z) < 1.0)) throw DomainError("kernel_eval needs |z| < 1");
  auto integrand = [&f, z](const discquad::DiscPoint& p) {
    const auto k = 1.0 - z * std::conj(p.z);
    return f(p) / (k * k);
  };
  return discquad::integrate(integrand, q);
}

double asymptotic_limit(double beta) {
  require_beta(beta);
  return -2.0 * specfun::sin_half_pi(beta) / (std::numbers::pi * (beta + 2.0));
}

AsymptoticTable asymptotic_law_check(double beta, const std::vector<std::size_t>& n_grid,
                                     std::size_t inner_cap) {
  if (!std::isfinite(beta) || !(beta > 0.0)) throw DomainError("asymptotic_law_check needs beta > 0");
  AsymptoticTable table;
  table.even_degenerate = is_even_nonnegative(beta);
  const double limit = asymptotic_limit(beta);
  SeriesWorkspace ws(beta);
  for (std::size_t n : n_grid) {
    AsymptoticRow row;
    row.n = n;
    row.scaled = static_cast<double>(n) * series_from_workspace(ws, n, inner_cap).value;
    row.limit = limit;
    const double diff = std::abs(row.scaled - limit);
    row.relative_error = limit == 0.0 ? diff : diff / std::abs(limit);
    table.rows.push_back(row);
  }
  table.error_decreasing = true;
  if (!table.even_degenerate) {
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
      if (!(table.rows[i].relative_error < table.rows[i - 1].relative_error)) table.error_decreasing = false;
    }
  }
  return table;
}

double annihilator_check(int k, const Polynomial& F, const discquad::DiscQuadrature& q) {
  if (k < 1) throw DomainError("annihilator_check needs k >= 1");
  if (F.degree() > 10) throw DomainError("annihilator_check needs deg F <= 10");
  const double twice_k = 2.0 * static_cast<double>(k);
  // conj(φ_{−2k}) = e^{2ik·arg(1−z)}.
  auto integrand = [&F, twice_k](const discquad::DiscPoint& p) {
    return F(p.z) * std::polar(1.0, twice_k * p.arg_w);
  };
  return std::abs(discquad::integrate_extrapolated(integrand, q).value);
}

}  // namespace bergman::projection
