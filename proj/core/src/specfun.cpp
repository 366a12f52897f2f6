#include "bergman/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bergman/errors.hpp"
#include "bergman/numerics.hpp"

namespace bergman::specfun {
namespace {

constexpr double kEulerGamma = 0.57721566490153286;
const double kHalfLogTwoPi = 0.5 * std::log(2.0 * std::numbers::pi);

// ζ(k) − 1 for k = 2..65.
constexpr std::array<double, 64> kZetaMinusOne = {
    6.44934066848226406e-01,
    2.02056903159594292e-01,
    8.23232337111381857e-02,
    3.69277551433699266e-02,
    1.73430619844491402e-02,
    8.34927738192282713e-03,
    4.07735619794433960e-03,
    2.00839282608221426e-03,
    9.94575127818085256e-04,
    4.94188604119464529e-04,
    2.46086553308048320e-04,
    1.22713347578489145e-04,
    6.12481350587048277e-05,
    3.05882363070204933e-05,
    1.52822594086518710e-05,
    7.63719763789976257e-06,
    3.81729326499984022e-06,
    1.90821271655393897e-06,
    9.53962033872796212e-07,
    4.76932986787806447e-07,
    2.38450502727733004e-07,
    1.19219925965311064e-07,
    5.96081890512594801e-08,
    2.98035035146522793e-08,
    1.49015548283650427e-08,
    7.45071178983543006e-09,
    3.72533402478845728e-09,
    1.86265972351304914e-09,
    9.31327432419668166e-10,
    4.65662906503378366e-10,
    2.32831183367650534e-10,
    1.16415501727005193e-10,
    5.82077208790270145e-11,
    2.91038504449710001e-11,
    1.45519218910419849e-11,
    7.27595983505748180e-12,
    3.63797954737865086e-12,
    1.81898965030706607e-12,
    9.09494784026388841e-13,
    4.54747378304215422e-13,
    2.27373684582465244e-13,
    1.13686840768022791e-13,
    5.68434198762758542e-14,
    2.84217097688930200e-14,
    1.42108548280316083e-14,
    7.10542739521085271e-15,
    3.55271369133711393e-15,
    1.77635684357912041e-15,
    8.88178421093081619e-16,
    4.44089210314381313e-16,
    2.22044605079804191e-16,
    1.11022302514106615e-16,
    5.55111512484548099e-17,
    2.77555756213612391e-17,
    1.38777878097252319e-17,
    6.93889390454415344e-18,
    3.46944695216592254e-18,
    1.73472347604757655e-18,
    8.67361738011993300e-19,
    4.33680869002065057e-19,
    2.16840434499721981e-19,
    1.08420217249424142e-19,
    5.42101086245664584e-20,
    2.71050543122346898e-20,
};

// B_{2k} / (2k (2k − 1)), k = 1..8.
constexpr std::array<double, 8> kStirlingCoeffs = {
    1.0 / 12.0,   -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

std::string describe(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Σ_{k≥2} (−1)^k (ζ(k) − 1) t^k / k, |t| ≤ 1/2.
double zeta_series(double t) {
  double acc = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    const double sign = ((i + 2) % 2 == 0) ? 1.0 : -1.0;
    acc = acc * t + sign * kZetaMinusOne[i] / k;
  }
  return acc * t * t;
}

// Σ c_k / y^{2k−1}.
double stirling_correction(double y) {
  const double inv = 1.0 / y;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (std::size_t i = kStirlingCoeffs.size(); i-- > 0;) acc = acc * inv2 + kStirlingCoeffs[i];
  return acc * inv;
}

double log_gamma_stirling(double x) {
  return (x - 0.5) * std::log(x) - x + kHalfLogTwoPi + stirling_correction(x);
}

// ln Γ(1 + t) for t ∈ [−1/2, 1/2].
double log_gamma_one_plus(double t) { return (1.0 - kEulerGamma) * t - std::log1p(t) + zeta_series(t); }

// ln Γ(2 + t) for t ∈ [−1/2, 1/2].
double log_gamma_two_plus(double t) { return (1.0 - kEulerGamma) * t + zeta_series(t); }

// sin(πx) with the argument reduced before multiplying by π.
double sin_pi(double x) {
  const double n = std::floor(x);
  const double s = std::sin(std::numbers::pi * (x - n));
  return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

struct LogGammaTerm {
  double log_abs = 0.0;
  double sign = 1.0;
  bool pole = false;
};

LogGammaTerm log_gamma_signed(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_ratio: non-finite argument " + describe(x));
  if (is_pole(x)) {
    // Residue of Γ at −m is (−1)^m / m!.
    const double m = -std::round(x);
    return {-log_gamma(m + 1.0), (static_cast<long long>(m) % 2 == 0) ? 1.0 : -1.0, true};
  }
  if (x > 0.0) return {log_gamma(x), 1.0, false};
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) - log_gamma(1.0 - x), s > 0 ? 1.0 : -1.0,
          false};
}

}  // namespace

bool is_pole(double x) noexcept {
  if (x > kPoleTolerance) return false;
  return std::abs(x - std::round(x)) < kPoleTolerance;
}

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("log_gamma: argument " + describe(x) + " is not a positive finite number");
  }
  if (x < 0.5) return log_gamma_one_plus(x) - std::log(x);
  if (x < 1.5) return log_gamma_one_plus(x - 1.0);
  if (x <= 2.5) return log_gamma_two_plus(x - 2.0);
  if (x < 10.0) {
    double y = x;
    double product = 1.0;
    while (y > 2.5) {
      y -= 1.0;
      product *= y;
    }
    return std::log(product) + log_gamma_two_plus(y - 2.0);
  }
  return log_gamma_stirling(x);
}

double log_gamma_difference(double x, double u, double v) {
  const double a = x + u;
  const double b = x + v;
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("log_gamma_difference: non-positive argument " + describe(a <= 0.0 ? a : b));
  }
  if (std::min(a, b) < 10.0) return log_gamma(a) - log_gamma(b);
  const double d = u - v;
  return d * std::log(b) + (a - 0.5) * std::log1p(d / b) - d + stirling_correction(a) -
         stirling_correction(b);
}

GammaRatio gamma_ratio(std::span<const double> num, std::span<const double> den) {
  double log_abs = 0.0;
  double sign = 1.0;
  int num_poles = 0;
  int den_poles = 0;
  for (double x : num) {
    const auto t = log_gamma_signed(x);
    log_abs += t.log_abs;
    sign *= t.sign;
    num_poles += t.pole ? 1 : 0;
  }
  for (double x : den) {
    const auto t = log_gamma_signed(x);
    log_abs -= t.log_abs;
    sign *= t.sign;
    den_poles += t.pole ? 1 : 0;
  }
  if (num_poles > den_poles) {
    std::string args;
    for (double x : num) {
      if (is_pole(x)) args += (args.empty() ? "" : ", ") + describe(x);
    }
    throw DomainError("gamma_ratio: uncancelled pole of Gamma in numerator at " + args);
  }
  if (den_poles > num_poles) return {0.0, true};
  // Equal pole counts: each pole contributed its residue and the 1/t factors
  // cancel, assuming all arguments approach their poles at the same rate.
  return {sign * std::exp(log_abs), false};
}

GammaRatio gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  return gamma_ratio(std::span<const double>(num.begin(), num.size()),
                     std::span<const double>(den.begin(), den.size()));
}

BinomialCoefficientTable binomial_series(double alpha, std::size_t order) {
  if (!std::isfinite(alpha)) throw DomainError("binomial_series: non-finite exponent");
  const double nearest = std::round(alpha);
  if (nearest >= 0.0 && std::abs(alpha - nearest) < kPoleTolerance) alpha = nearest;

  BinomialCoefficientTable table;
  table.alpha = alpha;
  table.coeffs.resize(order + 1);
  table.coeffs[0] = 1.0;
  for (std::size_t m = 0; m < order; ++m) {
    const double md = static_cast<double>(m);
    table.coeffs[m + 1] = table.coeffs[m] * ((md - alpha) / (md + 1.0));
  }
  return table;
}

double stirling_ratio(double x) {
  if (!std::isfinite(x) || x <= 0.0) throw DomainError("stirling_ratio: argument must be positive");
  if (x >= 10.0) return std::exp(stirling_correction(x));
  return std::exp(log_gamma(x + 1.0) - 0.5 * std::log(2.0 * std::numbers::pi * x) - x * std::log(x) + x);
}

double sin_half_pi(double beta) {
  const double h = 0.5 * beta;
  const double n = std::round(h);
  if (std::abs(h - n) < kPoleTolerance) return 0.0;
  // Reduce before multiplying by π so large β keeps its accuracy.
  const double r = h - 2.0 * std::round(0.5 * h);
  return std::sin(std::numbers::pi * r);
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta_function: arguments must be positive, got " + describe(a) + ", " + describe(b));
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

SeriesSum power_tail_sum(const std::function<double(double)>& log_term, double start, double power) {
  if (!(power > 1.0)) throw DomainError("power_tail_sum: leading power must exceed 1");
  if (!(start >= 2.0)) throw DomainError("power_tail_sum: start must be at least 2");

  // x = start · s^{−e} with e = q/(m − 1) turns ∫_start^∞ x^{−m} R(x) dx into
  // start^{1−m}/(m − 1) ∫_0^1 q s^{q−1} R(x(s)) ds, smooth in s when e is
  // of order one.
  const double log_start = std::log(start);
  constexpr double kMaxLogX = 600.0;
  auto mapped = [&](std::size_t order, double m, double log_cap, const std::function<double(double)>& reduced) {
    const double mm1 = m - 1.0;
    const double q = std::max(1.0, std::ceil(mm1));
    const double e = q / mm1;
    const auto rule = gauss_legendre(order);
    CompensatedSum acc;
    for (std::size_t i = 0; i < order; ++i) {
      const double s = 0.5 * (rule.nodes[i] + 1.0);
      const double w = 0.5 * rule.weights[i];
      const double log_x = std::min(log_cap, log_start - e * std::log(s));
      acc.add(w * q * std::pow(s, q - 1.0) * reduced(log_x));
    }
    return acc.value() * std::exp((1.0 - m) * log_start) / mm1;
  };
  // S(x) = x^p T(x), smooth in 1/x.
  auto log_shape = [&](double log_x) { return log_term(std::exp(log_x)) + power * log_x; };

  std::function<double(std::size_t)> integral;
  if (power >= 2.0) {
    integral = [&](std::size_t order) {
      return mapped(order, power, kMaxLogX, [&](double log_x) { return std::exp(log_shape(log_x)); });
    };
  } else {
    // For p close to 1 the map above crowds all of S's variation against
    // s = 1. Integrate the limit S(∞) exactly and map S − S(∞), which decays
    // one power faster. Because x·(S − S(∞)) multiplies the rounding of ln S
    // by x, that map stops at x = 10⁶·start, below the rounding floor.
    const double log_s_inf = log_shape(kMaxLogX);
    const double s_inf = std::exp(log_s_inf);
    const double log_cap = log_start + 6.0 * std::numbers::ln10;
    integral = [&, s_inf, log_s_inf, log_cap](std::size_t order) {
      const double head = s_inf * std::exp((1.0 - power) * log_start) / (power - 1.0);
      return head + mapped(order, power + 1.0, log_cap, [&](double log_x) {
               return std::exp(log_x) * s_inf * std::expm1(log_shape(log_x) - log_s_inf);
             });
    };
  }

  const double fine = integral(64);
  const double coarse = integral(32);

  const double t0 = std::exp(log_term(start));
  // T′ from central differences of ln T, Richardson-extrapolated; at small
  // start the plain h = 1/2 difference is as large as the neglected T‴ term.
  const auto central = [&](double h) { return (log_term(start + h) - log_term(start - h)) / (2.0 * h); };
  const double d_wide = central(0.5);
  const double d_narrow = central(0.25);
  const double t1 = t0 * (4.0 * d_narrow - d_wide) / 3.0;
  const double t1_error = t0 * std::abs(d_narrow - d_wide) / 3.0;

  SeriesSum out;
  out.value = fine + 0.5 * t0 - t1 / 12.0;
  const double third = t0 * power * (power + 1.0) * (power + 2.0) / (start * start * start);
  // exp(ln T) turns the rounding of ln T into a relative error of |ln T| ulps.
  const double rounding = 1e-15 * (1.0 + std::abs(log_term(start))) * std::abs(out.value);
  out.error = std::abs(fine - coarse) + third / 720.0 + t1_error / 12.0 + rounding;
  return out;
}

}  // namespace bergman::specfun
