#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bergman/errors.hpp"
#include "bergman/projection.hpp"
#include "generators.hpp"

namespace pj = bergman::projection;
namespace dq = bergman::discquad;
using bergman::DomainError;
using cd = std::complex<double>;

namespace {

// For β not an even integer the inner sum collapses to
//   c_n = (n+1) / (Γ(−a)Γ(2+a)(n−a)(n+1−a)),  a = β/2,
// which follows from summing the hypergeometric series at unit argument.
double closed_form(double beta, std::size_t n) {
  const double a = beta / 2.0;
  const double nn = static_cast<double>(n);
  return (nn + 1.0) / (std::tgamma(-a) * std::tgamma(2.0 + a) * (nn - a) * (nn + 1.0 - a));
}

double limit_constant(double beta) {
  return -2.0 * std::sin(beta * std::numbers::pi / 2.0) / (std::numbers::pi * (beta + 2.0));
}

bool near_even(double beta) { return std::abs(beta / 2.0 - std::round(beta / 2.0)) < 1e-3; }

}  // namespace

TEST(CoefficientSeries, TrivialSymbol) {
  EXPECT_EQ(pj::coefficient_series(0.0, 0).value, 1.0);
  for (std::size_t n = 1; n < 6; ++n) EXPECT_EQ(pj::coefficient_series(0.0, n).value, 0.0);
}

TEST(CoefficientSeries, SquareSymbol) {
  EXPECT_NEAR(pj::coefficient_series(2.0, 0).value, 0.5, 1e-12);
  EXPECT_NEAR(pj::coefficient_series(2.0, 1).value, -1.0, 1e-12);
  for (std::size_t n = 2; n < 10; ++n) EXPECT_EQ(pj::coefficient_series(2.0, n).value, 0.0);
}

TEST(CoefficientSeries, MatchesClosedForm) {
  bergman::testing::Gen gen;
  for (int trial = 0; trial < 30; ++trial) {
    const double beta = gen.uniform(-1.95, 8.0);
    if (near_even(beta)) continue;
    for (std::size_t n : {0u, 1u, 5u, 50u, 1000u}) {
      const auto c = pj::coefficient_series(beta, n);
      const double ref = closed_form(beta, n);
      EXPECT_NEAR(c.value, ref, 1e-9 * std::abs(ref) + 1e-15) << "beta=" << beta << " n=" << n;
      EXPECT_FALSE(c.even_degenerate);
    }
  }
}

TEST(CoefficientSeries, ErrorEstimateCoversActualError) {
  for (double beta : {-1.5, -0.5, 0.5, 1.0, 3.0, 5.5}) {
    for (std::size_t n : {0u, 3u, 200u}) {
      const auto c = pj::coefficient_series(beta, n);
      const double ref = closed_form(beta, n);
      EXPECT_LE(std::abs(c.value - ref), std::max(10.0 * c.error, 1e-12 * std::abs(ref)))
          << "beta=" << beta << " n=" << n;
    }
  }
}

TEST(CoefficientSeries, EvenDegeneracyIsExact) {
  for (double beta : {2.0, 4.0, 6.0}) {
    const std::size_t degree = static_cast<std::size_t>(beta / 2.0);
    for (std::size_t n = degree + 1; n <= 40; ++n) {
      const auto c = pj::coefficient_series(beta, n);
      EXPECT_EQ(c.value, 0.0) << "beta=" << beta << " n=" << n;
      EXPECT_TRUE(c.even_degenerate);
    }
  }
}

TEST(CoefficientSeries, RejectsOutOfRangeBeta) {
  EXPECT_THROW(pj::coefficient_series(-2.0, 0), DomainError);
  EXPECT_THROW(pj::coefficient_series(-3.0, 4), DomainError);
  EXPECT_THROW(pj::coefficient_series(std::nan(""), 0), DomainError);
}

TEST(CoefficientSeries, ScaledCoefficientsApproachLimit) {
  const double n = 10000.0;
  EXPECT_NEAR(n * pj::coefficient_series(1.0, 10000).value / limit_constant(1.0), 1.0, 2e-2);
  EXPECT_NEAR(limit_constant(1.0), -2.0 / (3.0 * std::numbers::pi), 1e-15);
}

TEST(PowerSymbol, Validation) {
  EXPECT_THROW(pj::PowerSymbol({{cd(1.1, 0.0), 1.0}}), DomainError);
  EXPECT_THROW(pj::PowerSymbol({{cd(1.0, 0.0), -2.0}}), DomainError);
  EXPECT_THROW(pj::PowerSymbol({{cd(1.0, 0.0), 1.0}, {cd(1.0, 0.0), 2.0}}), DomainError);
  EXPECT_NO_THROW(pj::PowerSymbol::unchecked({{cd(1.0, 0.0), -4.0}}));
  EXPECT_TRUE(pj::PowerSymbol::unchecked({{cd(1.0, 0.0), -4.0}}).is_unchecked());
  EXPECT_THROW(pj::PowerSymbol::unchecked({{cd(0.5, 0.0), -4.0}}), DomainError);
  EXPECT_FALSE(pj::PowerSymbol::single(1.0).is_unchecked());
}

TEST(PowerSymbol, UnimodularAtSamplePoints) {
  bergman::testing::Gen gen;
  const pj::PowerSymbol phi({{cd(1.0, 0.0), 1.3}, {std::polar(1.0, 2.0), -0.7}, {cd(-1.0, 0.0), 3.0}});
  for (int i = 0; i < 200; ++i) {
    const cd z = gen.disc_point(0.999);
    const auto p = dq::point_from_polar(std::abs(z), std::arg(z) < 0 ? std::arg(z) + 2 * std::numbers::pi : std::arg(z));
    EXPECT_NEAR(std::abs(phi(p)), 1.0, 1e-12);
  }
}

TEST(PowerSymbol, SingleFactorIsPowerOfUnitArgument) {
  bergman::testing::Gen gen;
  const double beta = 1.7;
  const auto phi = pj::PowerSymbol::single(beta);
  for (int i = 0; i < 50; ++i) {
    const cd z = gen.disc_point();
    const auto p = dq::point_from_polar(std::abs(z), std::arg(z) < 0 ? std::arg(z) + 2 * std::numbers::pi : std::arg(z));
    const cd w = 1.0 - z;
    EXPECT_LT(std::abs(phi(p) - std::pow(w / std::abs(w), beta)), 1e-12);
  }
}

TEST(CoefficientQuadrature, Examples) {
  const dq::DiscQuadrature q;
  EXPECT_NEAR(std::abs(pj::coefficient_quadrature(pj::PowerSymbol(), 0, q).value - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(pj::coefficient_quadrature(pj::PowerSymbol::single(2.0), 1, q).value.real(), -1.0, 1e-6);
  const auto minus_four = pj::PowerSymbol::unchecked({{cd(1.0, 0.0), -4.0}});
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_LT(std::abs(pj::coefficient_quadrature(minus_four, n, q).value), 1e-3) << "n=" << n;
  }
}

TEST(CoefficientQuadrature, AgreesWithSeriesAndIsReal) {
  const dq::DiscQuadrature q;
  for (double beta : {0.5, 1.0, 1.5, 2.5}) {
    const auto phi = pj::PowerSymbol::single(beta);
    for (std::size_t n : {0u, 1u, 5u, 20u}) {
      const auto quad = pj::coefficient_quadrature(phi, n, q);
      const auto ser = pj::coefficient_series(beta, n);
      EXPECT_LE(std::abs(quad.value.real() - ser.value), std::max(1e-5, quad.error + ser.error))
          << "beta=" << beta << " n=" << n;
      EXPECT_LE(std::abs(quad.value.imag()), 1e-8) << "beta=" << beta << " n=" << n;
    }
  }
}

TEST(Project, TrivialAndEvenSymbols) {
  const auto one = pj::project(0.0, 8);
  ASSERT_EQ(one.coeffs.size(), 9u);
  EXPECT_EQ(one.coeffs[0], cd(1.0));
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(one.coeffs[n], cd(0.0));
  EXPECT_EQ(one.tail_bound, 0.0);

  const auto two = pj::project(2.0, 8);
  EXPECT_NEAR(two.coeffs[0].real(), 0.5, 1e-12);
  EXPECT_NEAR(two.coeffs[1].real(), -1.0, 1e-12);
  for (std::size_t n = 2; n <= 8; ++n) EXPECT_EQ(two.coeffs[n], cd(0.0));
  EXPECT_EQ(two.tail_bound, 0.0);

  const auto four = pj::project(4.0, 8);
  EXPECT_NEAR(four.coeffs[0].real(), 0.0, 1e-12);
  EXPECT_NEAR(four.coeffs[1].real(), -2.0 / 3.0, 1e-12);
  EXPECT_NEAR(four.coeffs[2].real(), 1.0, 1e-12);
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(four.coeffs[n], cd(0.0));
}

TEST(Project, RejectsBadArguments) {
  EXPECT_THROW(pj::project(1.0, 0), DomainError);
  EXPECT_THROW(pj::project(-2.5, 10), DomainError);
}

TEST(Project, MatchesQuadratureAtSelectedIndices) {
  const auto s = pj::project(1.0, 1000);
  const dq::DiscQuadrature q;
  const auto phi = pj::PowerSymbol::single(1.0);
  for (std::size_t n : {0u, 1u, 10u, 100u}) {
    EXPECT_NEAR(s.coeffs[n].real(), pj::coefficient_quadrature(phi, n, q).value.real(), 1e-5) << "n=" << n;
  }
}

TEST(Project, TailBoundDominatesOmittedCoefficients) {
  for (double beta : {0.5, 1.0, 3.0, -1.5}) {
    const std::size_t order = 200;
    const auto s = pj::project(beta, order);
    EXPECT_GT(s.tail_bound, 0.0);
    for (std::size_t n = order + 1; n <= 4 * order; n += 7) {
      EXPECT_LE(n * std::abs(closed_form(beta, n)), s.tail_bound * (1.0 + 1e-12)) << "beta=" << beta << " n=" << n;
    }
  }
}

TEST(TaylorSeries, DerivativeMatchesDifferenceQuotient) {
  pj::TaylorSeries s;
  s.coeffs = {cd(1.0, 0.5), cd(-2.0, 0.0), cd(0.0, 3.0), cd(0.25, -1.0)};
  const cd z(0.3, -0.4);
  const double h = 1e-6;
  const cd fd = (s.value(z + h) - s.value(z - h)) / (2.0 * h);
  EXPECT_LT(std::abs(s.derivative(z) - fd), 1e-8);
  EXPECT_EQ(s.value(0.0), s.coeffs[0]);
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.derivative_tail(0.5), 0.0);
  EXPECT_THROW(s.derivative_tail(1.0), DomainError);
}

TEST(KernelEval, Examples) {
  bergman::testing::Gen gen;
  const dq::DiscQuadrature q;
  for (int i = 0; i < 10; ++i) {
    const cd z = gen.disc_point(0.7);
    EXPECT_LT(std::abs(pj::kernel_eval([](const dq::DiscPoint&) { return cd(1.0); }, z, q) - 1.0), 1e-10);
    EXPECT_LT(std::abs(pj::kernel_eval([](const dq::DiscPoint& p) { return std::conj(p.z); }, z, q)), 1e-10);
    EXPECT_LT(std::abs(pj::kernel_eval([](const dq::DiscPoint& p) { return cd(std::norm(p.z)); }, z, q) - 0.5),
              1e-10);
  }
  EXPECT_THROW(pj::kernel_eval([](const dq::DiscPoint&) { return cd(1.0); }, cd(1.0, 0.0), q), DomainError);
}

TEST(KernelEval, Linearity) {
  bergman::testing::Gen gen;
  const dq::DiscQuadrature q;
  const dq::Integrand f = [](const dq::DiscPoint& p) { return std::exp(std::conj(p.z)) * p.z + std::norm(p.z); };
  const dq::Integrand g = [](const dq::DiscPoint& p) { return std::cos(p.z) * std::conj(p.z * p.z); };
  for (int i = 0; i < 5; ++i) {
    const cd a = gen.complex_normal();
    const cd b = gen.complex_normal();
    const cd z = gen.disc_point(0.7);
    const cd combined = pj::kernel_eval([&](const dq::DiscPoint& p) { return a * f(p) + b * g(p); }, z, q);
    const cd separate = a * pj::kernel_eval(f, z, q) + b * pj::kernel_eval(g, z, q);
    EXPECT_LT(std::abs(combined - separate), 1e-10);
  }
}

TEST(KernelEval, FixesAnalyticPolynomials) {
  bergman::testing::Gen gen;
  const dq::DiscQuadrature q;
  for (int i = 0; i < 20; ++i) {
    const int n = i % 7;
    const cd z = gen.disc_point(0.7);
    const cd v = pj::kernel_eval([n](const dq::DiscPoint& p) { return std::pow(p.z, n); }, z, q);
    EXPECT_LT(std::abs(v - std::pow(z, n)), 1e-8) << "n=" << n;
  }
}

TEST(KernelEval, AgreesWithSeriesForSymbol) {
  // Away from the boundary the tensor rule resolves P phi_beta pointwise.
  const double beta = 3.0;
  const auto s = pj::project(beta, 400);
  dq::DiscQuadrature q;
  q.radial_order = 192;
  q.angular_order = 768;
  const auto phi = pj::PowerSymbol::single(beta);
  for (cd z : {cd(0.0, 0.0), cd(0.3, 0.2), cd(-0.4, 0.1)}) {
    EXPECT_LT(std::abs(pj::kernel_eval([&](const dq::DiscPoint& p) { return phi(p); }, z, q) - s.value(z)), 1e-4);
  }
}

TEST(AsymptoticLaw, LimitsAndMonotoneError) {
  const auto one = pj::asymptotic_law_check(1.0, {100, 1000, 10000});
  ASSERT_EQ(one.rows.size(), 3u);
  EXPECT_NEAR(one.rows[0].limit, -2.0 / (3.0 * std::numbers::pi), 1e-15);
  EXPECT_TRUE(one.error_decreasing);
  EXPECT_FALSE(one.even_degenerate);
  EXPECT_LT(one.rows.back().relative_error, 0.02);

  const auto three = pj::asymptotic_law_check(3.0, {100, 1000});
  EXPECT_NEAR(three.rows[0].limit, 2.0 / (5.0 * std::numbers::pi), 1e-15);
  EXPECT_GT(three.rows[1].scaled, 0.0);

  const auto four = pj::asymptotic_law_check(4.0, {10, 100});
  EXPECT_TRUE(four.even_degenerate);
  for (const auto& r : four.rows) EXPECT_EQ(r.scaled, 0.0);

  EXPECT_THROW(pj::asymptotic_law_check(0.0, {10}), DomainError);
  EXPECT_THROW(pj::asymptotic_law_check(-1.0, {10}), DomainError);
}

TEST(AsymptoticLimit, ExactZerosAndSign) {
  for (double beta : {0.0, 2.0, 4.0, 6.0}) EXPECT_EQ(pj::asymptotic_limit(beta), 0.0);
  EXPECT_LT(pj::asymptotic_limit(1.0), 0.0);
  EXPECT_GT(pj::asymptotic_limit(3.0), 0.0);
}

TEST(Annihilator, VanishesForKAtLeastTwo) {
  const dq::DiscQuadrature q;
  EXPECT_LT(pj::annihilator_check(2, bergman::Polynomial::monomial(0), q), 1e-3);
  EXPECT_LT(pj::annihilator_check(2, bergman::Polynomial::monomial(3), q), 1e-3);
  EXPECT_LT(pj::annihilator_check(3, bergman::Polynomial::monomial(1), q), 1e-3);
  bergman::testing::Gen gen;
  for (int i = 0; i < 5; ++i) {
    const auto F = bergman::Polynomial::random(gen.engine(), 10);
    EXPECT_LT(pj::annihilator_check(2 + i % 3, F, q), 1e-3);
  }
}

TEST(Annihilator, DoesNotVanishForKOne) {
  EXPECT_GT(pj::annihilator_check(1, bergman::Polynomial::monomial(0), dq::DiscQuadrature{}), 1e-2);
}

TEST(Annihilator, RejectsBadArguments) {
  const dq::DiscQuadrature q;
  EXPECT_THROW(pj::annihilator_check(0, bergman::Polynomial::monomial(0), q), DomainError);
  EXPECT_THROW(pj::annihilator_check(2, bergman::Polynomial::monomial(11), q), DomainError);
}
