#include <benchmark/benchmark.h>

#include "racah/relations.hpp"
#include "racah/representation.hpp"

using namespace racah;

static void BM_BuildSystem(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rewrite_system(n).rules().size());
}
BENCHMARK(BM_BuildSystem)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

// All Jacobi defects of one rank through a fresh reducer.
static void BM_JacobiReduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& rs = default_system(n);
  std::vector<GeneratorId> gens;
  for (const auto& g : rs.alphabet())
    if (!g.is_central_P()) gens.push_back(g);
  for (auto _ : state) {
    Reducer red(rs);
    std::size_t zero = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = a + 1; b < gens.size(); ++b)
        for (std::size_t c = b + 1; c < gens.size(); ++c)
          zero += red.reduce(catalog_jacobi_defect(gens[a], gens[b], gens[c], n)).is_zero();
    benchmark::DoNotOptimize(zero);
  }
}
BENCHMARK(BM_JacobiReduce)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CasimirReduce(benchmark::State& state) {
  const auto& rs = default_system(4);
  NCPoly p = commutator(casimir_frak(0), Om(1));
  for (auto _ : state) {
    Reducer red(rs);
    benchmark::DoNotOptimize(red.reduce(p).is_zero());
  }
}
BENCHMARK(BM_CasimirReduce)->Unit(benchmark::kMillisecond);

static void BM_CasimirEval(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  RepParams p{Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(1, 2), 4};
  NCPoly c = casimir_frak(0);
  for (auto _ : state) {
    Evaluator ev(p, window);
    benchmark::DoNotOptimize(ev.eval(c).reliable_count());
  }
}
BENCHMARK(BM_CasimirEval)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_OperatorProduct(benchmark::State& state) {
  const int window = static_cast<int>(state.range(0));
  RepParams p{Rational(1, 3), Rational(1, 5), Rational(2, 7), Rational(1, 2), 4};
  auto a = build_operator(GeneratorId::C({3, 4}), p, window);
  auto b = build_operator(GeneratorId::C({2, 3, 4}), p, window);
  for (auto _ : state) benchmark::DoNotOptimize((a * b).dim());
}
BENCHMARK(BM_OperatorProduct)->Arg(12)->Arg(24);

BENCHMARK_MAIN();
