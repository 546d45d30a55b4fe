// Serial vs OpenMP pair scans and whole suites. Run with OMP_NUM_THREADS set
// to compare thread counts; the parallel path equals the serial one.

#include <benchmark/benchmark.h>

#include "sphroots/verify.hpp"

using namespace sphroots;

namespace {

const char* kTypes[] = {"B4", "C5", "F4", "D5"};

void BM_ScanPairs(benchmark::State& state) {
  const bool parallel = state.range(1) != 0;
  auto sys = RootSystem::parse(kTypes[state.range(0)]);
  const auto roots = spherical_roots_of_G(sys, 2, 4);
  auto any = [](const SphericalRoot&, const SphericalRoot&) { return true; };
  for (auto _ : state) benchmark::DoNotOptimize(scan_pairs(sys, roots, any, parallel));
  state.SetLabel(std::string(kTypes[state.range(0)]) + (parallel ? " omp" : " serial"));
}
BENCHMARK(BM_ScanPairs)->ArgsProduct({{0, 1, 2, 3}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_Suite(benchmark::State& state) {
  const auto suite = static_cast<Suite>(state.range(0));
  SuiteOptions opt{4, state.range(1) != 0};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(suite, 2, 5, false, opt));
  state.SetLabel(to_string(suite) + (opt.parallel ? " omp" : " serial"));
}
BENCHMARK(BM_Suite)
    ->ArgsProduct({{static_cast<int>(Suite::Obtuseness), static_cast<int>(Suite::Angles),
                    static_cast<int>(Suite::SimpleSystems)},
                   {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
