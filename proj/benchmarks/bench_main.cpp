#include <benchmark/benchmark.h>

#include <numbers>

#include "wadd/green.hpp"
#include "wadd/identities.hpp"
#include "wadd/special.hpp"

namespace {

void BM_KummerM(benchmark::State& state) {
  const double z = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wadd::kummer_m(0.5, 1.5, z));
}
BENCHMARK(BM_KummerM)->Arg(1)->Arg(10)->Arg(40);

void BM_WhittakerW(benchmark::State& state) {
  const double mu = static_cast<double>(state.range(0)) + 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(wadd::whittaker_w({0.3, mu}, 2.0));
}
BENCHMARK(BM_WhittakerW)->Arg(0)->Arg(5)->Arg(40);

void BM_WhittakerAddition(benchmark::State& state) {
  const auto geo = wadd::geometry_from(5.0, 1.0, std::numbers::pi / 3);
  for (auto _ : state) benchmark::DoNotOptimize(wadd::verify_whittaker_addition({0.3, 0.4}, geo));
}
BENCHMARK(BM_WhittakerAddition)->Unit(benchmark::kMillisecond);

// Stress case of the generalized addition formula at 60 digits.
void BM_PiAdditionStress(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wadd::pi_addition_terms(1.0, 20.0, 1.0, 2.0, 60));
}
BENCHMARK(BM_PiAdditionStress)->Unit(benchmark::kMillisecond);

void BM_Hostler(benchmark::State& state) {
  const wadd::SphericalPoint a{2.0, 0.6, 0.3}, b{0.9, 2.1, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(wadd::hostler_green({1.0, 0.7}, a, b));
}
BENCHMARK(BM_Hostler);

void BM_PartialWave(benchmark::State& state) {
  const wadd::SphericalPoint a{2.0, 0.6, 0.3}, b{0.9, 2.1, 4.0};
  for (auto _ : state) benchmark::DoNotOptimize(wadd::partial_wave_green({1.0, 0.7}, a, b));
}
BENCHMARK(BM_PartialWave)->Unit(benchmark::kMicrosecond);

void BM_LemmaBinomial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wadd::verify_lemma_binomial(n, mpq_class(7, 3)));
}
BENCHMARK(BM_LemmaBinomial)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
