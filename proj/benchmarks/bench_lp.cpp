#include <benchmark/benchmark.h>

#include "entropic/analytic.hpp"
#include "entropic/cones.hpp"
#include "entropic/entropy.hpp"
#include "entropic/fixtures.hpp"
#include "entropic/marginal_lp.hpp"

using namespace entropic;

namespace {

void BM_ProveCycleRow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LinearInequality row = cycle_inequality(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove_shannon(row, n).provable);
  }
}
BENCHMARK(BM_ProveCycleRow)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ProveZhangYeung(benchmark::State& state) {
  const LinearInequality zy = zhang_yeung();
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove_shannon(zy, 4).provable);
  }
}
BENCHMARK(BM_ProveZhangYeung)->Unit(benchmark::kMillisecond);

void BM_ProveCommonInformationUnderMarkov(benchmark::State& state) {
  const auto markov = local_markov_constraints(common_ancestor_net());
  const LinearInequality row = common_info_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove_shannon(row, 6, markov).provable);
  }
}
BENCHMARK(BM_ProveCommonInformationUnderMarkov)->Unit(benchmark::kMillisecond);

void BM_ExtendFzy(benchmark::State& state) {
  const PartialRankVector fzy = fzy_fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(extend_partial(fzy).feasible);
  }
}
BENCHMARK(BM_ExtendFzy)->Unit(benchmark::kMillisecond);

void BM_MarginalLp(benchmark::State& state) {
  const MarginalModel model = cycle_model(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(marginal_lp(model).noncontextual);
  }
}
BENCHMARK(BM_MarginalLp)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_MarginalEntropyVector(benchmark::State& state) {
  const MarginalModel model = realize_zy_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(marginal_entropy_vector(model).values().size());
  }
}
BENCHMARK(BM_MarginalEntropyVector);

}  // namespace
