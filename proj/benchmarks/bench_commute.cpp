#include <benchmark/benchmark.h>

#include "ncaffine/ncaffine.hpp"

using namespace ncaffine;

namespace {

// Row index into all_algebra_types(), engine, degree.
void BM_Commute(benchmark::State& state) {
  const AlgebraType t = all_algebra_types()[static_cast<std::size_t>(state.range(0))];
  const auto engine = static_cast<Engine>(state.range(1));
  const auto n = static_cast<unsigned>(state.range(2));
  Algebra alg = symbolic_algebra(t);
  state.SetLabel(t.to_string() + " " + std::string(to_string(engine)));
  for (auto _ : state) benchmark::DoNotOptimize(commute(alg, n, n, engine));
}

void CommuteArgs(benchmark::internal::Benchmark* b) {
  const auto types = all_algebra_types();
  for (long row = 0; row < static_cast<long>(types.size()); ++row) {
    std::vector<Engine> engines{Engine::Rewrite, Engine::Pullback};
    if (has_closed_formula(types[row])) engines.push_back(Engine::Formula);
    if (has_recurrence(types[row])) engines.push_back(Engine::Recurrence);
    for (Engine e : engines)
      for (long n : {4, 8}) b->Args({row, static_cast<long>(e), n});
  }
}

void BM_GenericProduct(benchmark::State& state) {
  Algebra gen = generic_algebra();
  NcPoly s = NcPoly::x(gen) + NcPoly::y(gen);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow(s, n));
}

void BM_WeylBinomial(benchmark::State& state) {
  Algebra w = model_algebra(ModelClass::Weyl, FieldMode::rational());
  NcPoly s = NcPoly::x(w) + NcPoly::y(w);
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pow(s, n));
}

void BM_Center(benchmark::State& state) {
  Algebra qp = model_algebra(ModelClass::QuantumPlane, FieldElem::from_int(FieldMode::prime(7), 2));
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(center_basis(qp, d));
}

}  // namespace

BENCHMARK(BM_Commute)->Apply(CommuteArgs)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericProduct)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeylBinomial)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Center)->DenseRange(3, 9, 3)->Unit(benchmark::kMillisecond);
