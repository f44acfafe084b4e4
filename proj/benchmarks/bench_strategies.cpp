#include <benchmark/benchmark.h>

#include "ncaffine/ncaffine.hpp"

using namespace ncaffine;

namespace {

// Suite index into default_suite(), strategy index into kStrategies.
void BM_Strategy(benchmark::State& state) {
  static const std::vector<Workload> suite = default_suite(default_bench_algebra());
  const Workload& w = suite[static_cast<std::size_t>(state.range(0))];
  const Strategy s = kStrategies[static_cast<std::size_t>(state.range(1))];
  std::size_t peak = 0;
  for (auto _ : state) {
    BenchReport r = run_bench(w, s);
    peak = r.peak_entries;
    benchmark::DoNotOptimize(r.outputs);
  }
  state.SetLabel(w.name + " " + std::string(to_string(s)));
  state.counters["peak_entries"] = static_cast<double>(peak);
}

}  // namespace

BENCHMARK(BM_Strategy)->ArgsProduct({{0, 1, 2, 3, 4}, {0, 1, 2}})->Unit(benchmark::kMillisecond)->Iterations(1);
