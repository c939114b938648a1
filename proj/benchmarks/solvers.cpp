#include <benchmark/benchmark.h>

#include "rdom/canonical.hpp"
#include "rdom/catalog.hpp"
#include "rdom/cnf.hpp"
#include "rdom/constructions.hpp"
#include "rdom/domination.hpp"
#include "rdom/reduction.hpp"

namespace {

using namespace rdom;

std::vector<Graph> random_batch(int order, int count) {
  SplitMix64 rng(0xbe9c4);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(order, rng));
  return out;
}

void BM_GammaR2Random(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_r2(graphs[i++ % graphs.size()]).value);
}
BENCHMARK(BM_GammaR2Random)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_GammaRomanRandom(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gamma_roman(graphs[i++ % graphs.size()]).value);
}
BENCHMARK(BM_GammaRomanRandom)->Arg(8)->Arg(12)->Arg(16)->Arg(24);

void BM_ProductCheck(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_r2_product_check(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_ProductCheck)->Arg(6)->Arg(8);

void BM_Gadget(benchmark::State& state) {
  SplitMix64 rng(7);
  CnfFormula f{4, {}};
  for (int j = 0; j < 6; ++j) {
    Clause c;
    for (int d = 0; d < 3; ++d) {
      const int v = (j + d) % 4 + 1;
      c.push_back(rng.coin() ? v : -v);
    }
    f.clauses.push_back(c);
  }
  const auto r = build_reduction(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_r2(r.graph).value);
    benchmark::DoNotOptimize(gamma_roman(r.graph).value);
  }
}
BENCHMARK(BM_Gadget)->Unit(benchmark::kMillisecond);

void BM_GapInstance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gap_instance(k).order());
}
BENCHMARK(BM_GapInstance)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto graphs = random_batch(static_cast<int>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
