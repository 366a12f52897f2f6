#include <benchmark/benchmark.h>

#include <complex>

#include "bergman/bloch.hpp"
#include "bergman/discquad.hpp"
#include "bergman/extremal.hpp"
#include "bergman/projection.hpp"
#include "bergman/specfun.hpp"

namespace {

using namespace bergman;

void BM_LogGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::log_gamma(x));
    x = x < 1e5 ? x * 1.7 : 0.37;
  }
}
BENCHMARK(BM_LogGamma);

void BM_CoefficientSeries(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(projection::coefficient_series(1.0, n).value);
}
BENCHMARK(BM_CoefficientSeries)->Arg(0)->Arg(100)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_Project(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(projection::project(1.0, order).tail_bound);
}
BENCHMARK(BM_Project)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_LittleBlochDistance(benchmark::State& state) {
  const auto series = projection::project(1.0, 2000);
  for (auto _ : state) benchmark::DoNotOptimize(bloch::little_bloch_distance(series, 1.0).estimate);
}
BENCHMARK(BM_LittleBlochDistance)->Unit(benchmark::kMillisecond);

void BM_IntegrateTensor(benchmark::State& state) {
  const discquad::DiscQuadrature q;
  const discquad::Integrand f = [](const discquad::DiscPoint& p) { return std::exp(p.z) * std::conj(p.z); };
  for (auto _ : state) benchmark::DoNotOptimize(discquad::integrate(f, q));
}
BENCHMARK(BM_IntegrateTensor)->Unit(benchmark::kMillisecond);

void BM_IntegrateExtrapolated(benchmark::State& state) {
  const discquad::DiscQuadrature q;
  const discquad::Integrand f = [](const discquad::DiscPoint& p) {
    return std::complex<double>(std::exp(-p.log_abs_w));
  };
  for (auto _ : state) benchmark::DoNotOptimize(discquad::integrate_extrapolated(f, q).value);
}
BENCHMARK(BM_IntegrateExtrapolated)->Unit(benchmark::kMillisecond);

void BM_PowerNormSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(extremal::power_norm_series(-1.99).value);
}
BENCHMARK(BM_PowerNormSeries)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
