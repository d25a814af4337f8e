#include <benchmark/benchmark.h>

#include "pedal/inverse_pedal.hpp"
#include "pedal/notable_points.hpp"
#include "pedal/pedal_map.hpp"
#include "sampling.hpp"

using namespace pedal;
using namespace pedal::app;

namespace {

constexpr double kThetaMin = 5.0 * kPi / 180.0;

Triangle bench_triangle(std::uint64_t i) {
  TrialRng rng(97, i);
  return sample_triangle(rng, SamplerOptions{kThetaMin, true});
}

void BM_PedalTriangle(benchmark::State& state) {
  const Triangle tri = bench_triangle(0);
  TrialRng rng(98, 0);
  const Point m = sample_point_off_circle(rng, tri);
  for (auto _ : state) benchmark::DoNotOptimize(pedal_triangle(tri, m));
}
BENCHMARK(BM_PedalTriangle);

void BM_Solve(benchmark::State& state) {
  const Triangle tri = bench_triangle(1);
  const auto base = angles_of(tri);
  const AngleTriple target{base.beta1, base.gamma1, base.alpha1};
  for (auto _ : state) benchmark::DoNotOptimize(solve(tri, target));
}
BENCHMARK(BM_Solve);

void BM_ElevenPoints(benchmark::State& state) {
  const Triangle tri = bench_triangle(2);
  for (auto _ : state) benchmark::DoNotOptimize(eleven_points(tri));
}
BENCHMARK(BM_ElevenPoints);

void BM_BasicApollonius(benchmark::State& state) {
  const Triangle tri = bench_triangle(3);
  for (auto _ : state) benchmark::DoNotOptimize(basic_apollonius_circles(tri));
}
BENCHMARK(BM_BasicApollonius);

void BM_VerifySampling(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bench_triangle(i++));
}
BENCHMARK(BM_VerifySampling);

}  // namespace

BENCHMARK_MAIN();
