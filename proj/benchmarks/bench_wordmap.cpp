#include <benchmark/benchmark.h>

#include <random>

#include "wordmap/kernel_lab.hpp"
#include "wordmap/laws.hpp"
#include "wordmap/quotient_lab.hpp"
#include "wordmap/weyl.hpp"

using namespace wordmap;

static void BM_EvaluateTheta(benchmark::State& state) {
  const auto g = Group::parse("SL2:p=101");
  std::mt19937_64 rng(1);
  const auto x = random_tuple(g, 2, rng);
  const auto w = theta(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate(w, x));
  state.counters["syllables"] = static_cast<double>(w.syllables().size());
}
BENCHMARK(BM_EvaluateTheta)->DenseRange(1, 6);

static void BM_DerivedWord(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(derived_word(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DerivedWord)->DenseRange(1, 5);

static void BM_ApplyAutomorphism(benchmark::State& state) {
  const auto g = Group::parse("GL:s=4,p=5");
  std::mt19937_64 rng(2);
  const int n = static_cast<int>(state.range(0));
  const auto sigma = random_automorphism(n, rng, 8);
  const auto x = random_tuple(g, n, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(wordmap::apply(sigma, x));
}
BENCHMARK(BM_ApplyAutomorphism)->Arg(2)->Arg(4)->Arg(8);

static void BM_KernelWitnessBorel(benchmark::State& state) {
  const auto g = Group::parse("Borel:s=2,p=5");
  (void)g.elements();
  for (auto _ : state)
    benchmark::DoNotOptimize(kernel_witness_solvable(g, 3));
}
BENCHMARK(BM_KernelWitnessBorel)->Unit(benchmark::kMillisecond);

static void BM_OrbitSpace(benchmark::State& state) {
  const auto g = Group::parse("SL2:p=3");
  const Subgroup all(g.elements());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const OrbitSpace space(g, n, all);
    benchmark::DoNotOptimize(space.orbit_count());
  }
}
BENCHMARK(BM_OrbitSpace)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_LongestElement(benchmark::State& state) {
  const auto rs = weyl::build_root_system({'E', static_cast<int>(state.range(0))});
  for (auto _ : state)
    benchmark::DoNotOptimize(weyl::longest_element(rs));
}
BENCHMARK(BM_LongestElement)->DenseRange(6, 8);
BENCHMARK_MAIN();
