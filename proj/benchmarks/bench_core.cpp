#include <benchmark/benchmark.h>

#include "rancher/investor.hpp"
#include "rancher/lyapunov.hpp"
#include "rancher/rancher.hpp"
#include "rancher/rng.hpp"

namespace {

using namespace rancher;

void BM_RancherStep(benchmark::State& state) {
  RandomStream rs(1, 0);
  RancherWalk walk;
  for (auto _ : state) {
    walk.step(rs);
  }
  state.SetItemsProcessed(state.iterations());
  state.counters["hull_size"] = static_cast<double>(walk.hull().size());
}
BENCHMARK(BM_RancherStep);

void BM_RancherWalk(benchmark::State& state) {
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t rep = 0;
  for (auto _ : state) {
    RandomStream rs = RandomStream::derive(7, rep++);
    RancherWalk walk;
    for (std::uint64_t i = 0; i < steps; ++i) walk.step(rs);
    benchmark::DoNotOptimize(walk.position());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(steps));
}
BENCHMARK(BM_RancherWalk)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_RancherStepWithDiagnostics(benchmark::State& state) {
  RandomStream rs(2, 0);
  RancherWalk walk;
  DriftConfig cfg;
  double acc = 0.0;
  for (auto _ : state) {
    walk.step(rs);
    if (const auto d = walk.diagnostics()) {
      acc += f_value(d->d, d->alpha, d->alpha_prime, cfg);
    }
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RancherStepWithDiagnostics);

void BM_InvestorStep(benchmark::State& state) {
  RandomStream rs(3, 0);
  InvestorWalk walk(1.0);
  for (auto _ : state) {
    walk.step(rs);
  }
  state.SetItemsProcessed(state.iterations());
  state.counters["hull_size"] = static_cast<double>(walk.graph_hull().size());
}
BENCHMARK(BM_InvestorStep);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
