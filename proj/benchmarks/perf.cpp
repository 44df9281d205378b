#include <benchmark/benchmark.h>

#include "bas/engine.hpp"
#include "bas/harness.hpp"

namespace {

using namespace bas;

void BM_EvalBenchmark(benchmark::State& state) {
  const auto id = all_benchmarks()[static_cast<std::size_t>(state.range(0))];
  const auto spec = bas::benchmark(id);
  RandomStream rng(1);
  const auto x = random_init(spec.space, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spec.objective.eval(x));
  }
  state.SetLabel(to_string(id));
}
BENCHMARK(BM_EvalBenchmark)->DenseRange(0, 6);

void BM_SampleDirection(benchmark::State& state) {
  RandomStream rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_direction(n, rng));
  }
}
BENCHMARK(BM_SampleDirection)->Arg(2)->Arg(10)->Arg(30);

void BM_BasStep(benchmark::State& state) {
  const auto spec = bas::benchmark(BenchmarkId::f1);
  const auto params = default_benchmark_params(BenchmarkId::f1);
  RandomStream rng(1);
  BeetleState s{random_init(spec.space, rng), params.delta0, params.d_init, 0};
  for (auto _ : state) {
    s = bas_step(s, spec.objective, spec.space, params, rng);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BasStep);

void BM_Run(benchmark::State& state) {
  const auto spec = bas::benchmark(BenchmarkId::f5);
  auto params = default_benchmark_params(BenchmarkId::f5);
  params.k_max = static_cast<std::uint64_t>(state.range(0));
  RandomStream rng(3);
  const auto x0 = random_init(spec.space, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(spec.objective, spec.space, x0, params));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Run)->Arg(1000)->Arg(10000);

void BM_PenalizedSpring(benchmark::State& state) {
  const auto problem = engineering_problem(EngineeringId::spring);
  const auto penalized = penalized_objective(problem);
  RandomStream rng(5);
  const auto x = random_init(problem.space, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(penalized.eval(x));
  }
}
BENCHMARK(BM_PenalizedSpring);

}  // namespace

BENCHMARK_MAIN();
