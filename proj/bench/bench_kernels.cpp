// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <omp.h>

#include "hzml/moments.hpp"

namespace {

int max_workers() { return omp_get_max_threads(); }

void BM_FindZerosSerial(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hzml::find_zeros_serial(1, 2.0, T, hzml::kDefaultScanDensity));
}

void BM_FindZerosParallel(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  const hzml::Execution exec{max_workers()};
  for (auto _ : state) benchmark::DoNotOptimize(hzml::find_zeros(1, 2.0, T, hzml::kDefaultScanDensity, exec));
  state.counters["workers"] = exec.workers;
}

void BM_ContinuousMomentSerial(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hzml::continuous_moment_serial(0, T));
}

void BM_ContinuousMomentParallel(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  const hzml::Execution exec{max_workers()};
  for (auto _ : state) benchmark::DoNotOptimize(hzml::continuous_moment_detail(0, T, exec));
  state.counters["workers"] = exec.workers;
}

void BM_DiscreteMoment(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  const auto zl = hzml::find_zeros(1, 2.0, T, hzml::kDefaultScanDensity, hzml::Execution{max_workers()});
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    if (parallel)
      benchmark::DoNotOptimize(hzml::discrete_moment(0, zl, hzml::Execution{max_workers()}));
    else
      benchmark::DoNotOptimize(hzml::discrete_moment_serial(0, zl));
  }
}

}  // namespace

BENCHMARK(BM_FindZerosSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FindZerosParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContinuousMomentSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContinuousMomentParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiscreteMoment)->Args({1000, 0})->Args({1000, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
