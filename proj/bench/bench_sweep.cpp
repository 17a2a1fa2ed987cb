#include <benchmark/benchmark.h>

#include "extlat/lab.hpp"

namespace {

extlat::SweepParams params(int jobs) {
  extlat::SweepParams sp;
  sp.n_max = 5;
  sp.jobs = jobs;
  return sp;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    extlat::clear_caches();
    benchmark::DoNotOptimize(extlat::sweep_serial("STANLEY", params(1)));
  }
}

void BM_SweepParallel(benchmark::State& state) {
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    extlat::clear_caches();
    benchmark::DoNotOptimize(extlat::sweep_parallel("STANLEY", params(jobs)));
  }
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
