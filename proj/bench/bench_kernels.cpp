// Serial reference vs OpenMP kernels: quadrature node evaluation and the
// exact grid sup.
#include <benchmark/benchmark.h>

#include "polyzeta/poly/structural.hpp"
#include "polyzeta/quad/kernels.hpp"

using namespace polyzeta;

namespace {

void BM_QuadNodes(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const Integrand f(KernelKind::BetaTanh, build(Family::Xi, n), 192);
  const BigFloat h(Rational(1, 64), 192);
  std::vector<long> ks;
  for (long k = 1; k <= 4096; ++k) ks.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_nodes(f, h, ks, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(ks.size()));
}

void BM_GridSup(benchmark::State& state, Exec exec) {
  const EvenPolynomial p = build(Family::Lambda, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(grid_sup_abs(p, 1024, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_QuadNodes, serial, Exec::Serial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_QuadNodes, openmp, Exec::Parallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_GridSup, serial, Exec::Serial)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GridSup, openmp, Exec::Parallel)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
