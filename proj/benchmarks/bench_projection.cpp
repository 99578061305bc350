#include <benchmark/benchmark.h>

#include "entropic/cones.hpp"
#include "entropic/polyhedra.hpp"

using namespace entropic;

namespace {

void BM_ProjectCycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scenario scenario = cycle_scenario(n);
  std::size_t rows = 0;
  for (auto _ : state) {
    const InequalitySystem facets = project_cone(n, scenario, {});
    rows = facets.size();
    benchmark::DoNotOptimize(rows);
  }
  state.counters["facets"] = static_cast<double>(rows);
}
BENCHMARK(BM_ProjectCycle)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_ProjectZhangYeungScenario(benchmark::State& state) {
  const Scenario scenario = zy_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_cone(4, scenario, {}).size());
  }
}
BENCHMARK(BM_ProjectZhangYeungScenario)->Unit(benchmark::kMillisecond);

// Threads only affect the exact redundancy passes.
void BM_ProjectZhangYeungThreads(benchmark::State& state) {
  ProjectOptions options;
  options.threads = static_cast<int>(state.range(0));
  const Scenario scenario = zy_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_cone(4, scenario, {}, options).size());
  }
}
BENCHMARK(BM_ProjectZhangYeungThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_RemoveRedundantElemental(benchmark::State& state) {
  const InequalitySystem gamma = elemental_system(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(remove_redundant(gamma, Redundancy::kExact).size());
  }
}
BENCHMARK(BM_RemoveRedundantElemental)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace
