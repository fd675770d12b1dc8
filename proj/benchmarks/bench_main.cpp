#include <benchmark/benchmark.h>

#include "flagchow/motive.hpp"
#include "flagchow/steenrod.hpp"
#include "flagchow/titsjinv.hpp"

using namespace flagchow;

namespace {

const RootSystem& e7() {
  static const RootSystem rs(DynkinType::parse("E7"));
  return rs;
}

const VertexSet kP1{2, 3, 4, 5, 6, 7};
const VertexSet kP7{1, 2, 3, 4, 5, 6};

void BM_CosetTable(benchmark::State& state) {
  const RootSystem rs(DynkinType::parse(state.range(0) ? "E7" : "F4"));
  const VertexSet theta = state.range(0) ? kP1 : VertexSet{};
  for (auto _ : state) {
    CosetTable ct(rs, theta);
    benchmark::DoNotOptimize(ct.size());
  }
}
BENCHMARK(BM_CosetTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Poincare(benchmark::State& state) {
  const RootSystem rs(DynkinType::parse("E8"));
  for (auto _ : state) benchmark::DoNotOptimize(poincare_polynomial(rs, {1, 2, 3, 4, 5, 6, 7}));
}
BENCHMARK(BM_Poincare);

void BM_MultiplyMiddleDegreesE7P7(benchmark::State& state) {
  const FlagVariety x(e7(), kP7);
  const auto& mid = x.basis(13);
  const auto& other = x.basis(14);
  for (auto _ : state) {
    for (int a : mid) {
      for (int b : other) benchmark::DoNotOptimize(x.multiply(x.schubert(a), x.schubert(b)));
    }
  }
}
BENCHMARK(BM_MultiplyMiddleDegreesE7P7)->Unit(benchmark::kMillisecond);

void BM_ChernE7P1(benchmark::State& state) {
  for (auto _ : state) {
    const FlagVariety x(e7(), kP1);
    benchmark::DoNotOptimize(x.chern_tangent());
  }
}
BENCHMARK(BM_ChernE7P1)->Unit(benchmark::kMillisecond);

void BM_SteenrodCh8E7P1(benchmark::State& state) {
  const FlagVariety x(e7(), kP1);
  for (auto _ : state) {
    const SteenrodSquares sq(x);
    for (int h : x.basis(8)) benchmark::DoNotOptimize(sq.component(x.schubert(h, 2), 8));
  }
}
BENCHMARK(BM_SteenrodCh8E7P1)->Unit(benchmark::kMillisecond);

void BM_DecomposeE7P7(benchmark::State& state) {
  const CosetTable ct(e7(), kP7);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(ct, {1, 6, 7}));
}
BENCHMARK(BM_DecomposeE7P7);

void BM_TableAutomatonE7(benchmark::State& state) {
  const DynkinType type = DynkinType::parse("E7");
  const TableInvariants inv{{0, 1, 1, 1}, {1}, false};
  for (auto _ : state) benchmark::DoNotOptimize(height(automaton(e7(), higher_index_table(type, inv))));
}
BENCHMARK(BM_TableAutomatonE7);

}  // namespace
BENCHMARK_MAIN();
