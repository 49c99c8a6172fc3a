#include <benchmark/benchmark.h>

#include <cmath>

#include "siteaddr/dynamics.hpp"
#include "siteaddr/lightshift.hpp"
#include "siteaddr/optics.hpp"
#include "siteaddr/special.hpp"
#include "siteaddr/units.hpp"

namespace {

using namespace siteaddr;

const BeamGeometry g_beam{20e-3, 20e-3, 20e-3, 421e-9, 17e-6};
constexpr double g_lambda = 850e-9;

void BM_BesselJ0(benchmark::State& state) {
  double x = 0.0;
  for (auto _ : state) {
    x += 0.37;
    if (x > 40.0) x -= 40.0;
    benchmark::DoNotOptimize(bessel_j0(x));
  }
}
BENCHMARK(BM_BesselJ0);

void BM_AiryIntensity(benchmark::State& state) {
  const double tol = std::pow(10.0, -state.range(0));
  const double r = 0.5 * g_lambda;
  for (auto _ : state)
    benchmark::DoNotOptimize(airy_relative_intensity(g_beam, r, tol));
}
BENCHMARK(BM_AiryIntensity)->Arg(6)->Arg(8)->Arg(10);

void BM_IntensityMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(intensity_map(g_beam, 1.05 * g_lambda, n, 1e-8));
  state.SetComplexityN(n);
}
BENCHMARK(BM_IntensityMap)->Arg(97)->Arg(385)->Arg(769)->Complexity(benchmark::oN);

void BM_EvolveResonant(benchmark::State& state) {
  const QubitState ground(cplx(1.0, 0.0), cplx(0.0, 0.0));
  const PulseShape pulse = PulseShape::gaussian_pulse(1.0, 1.81);
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve(ground, pulse, 0.0, 1e-10));
}
BENCHMARK(BM_EvolveResonant);

void BM_EvolveDetuned(benchmark::State& state) {
  const QubitState ground(cplx(1.0, 0.0), cplx(0.0, 0.0));
  const PulseShape pulse = PulseShape::gaussian_pulse(1.0, 6.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve(ground, pulse, 8.0, 1e-10));
}
BENCHMARK(BM_EvolveDetuned);

void BM_ManipulationError(benchmark::State& state) {
  const double s2 = std::sqrt(0.5);
  const QubitState coherent(cplx(s2, 0.0), cplx(0.0, s2));
  for (auto _ : state)
    benchmark::DoNotOptimize(manipulation_error(coherent, 3.0, 1.0, 8.0));
}
BENCHMARK(BM_ManipulationError);

}  // namespace

BENCHMARK_MAIN();
