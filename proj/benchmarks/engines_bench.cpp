#include <benchmark/benchmark.h>

#include "nihoperm/families.hpp"
#include "nihoperm/spectra.hpp"

using namespace nihoperm;

static void BM_Mul(benchmark::State& state) {
  const auto f = gf2n::field_new(static_cast<int>(state.range(0)));
  gf2n::FieldElement a{0x5}, b{f.primitive()};
  for (auto _ : state) {
    a = f.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Mul)->Arg(8)->Arg(16)->Arg(20);

static void BM_BruteConjecture(benchmark::State& state) {
  const auto [f, g] = families::conjecture_trinomials(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectra::is_permutation_brute(f).verdict);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.ctx().size()));
}
BENCHMARK(BM_BruteConjecture)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_CharSumEngine(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto f = gf2n::field_new(n);
  const auto p = gf2n::SparsePoly::monomial(f, 7);
  spectra::EngineOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(spectra::is_pp_charsum(p, opts).verdict);
}
BENCHMARK(BM_CharSumEngine)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_DeltaCriterion(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const bool direct = state.range(1) != 0;
  const auto inst = families::gen_prop3(m, 3).front();
  spectra::EngineOptions opts;
  opts.threads = 1;
  opts.force_direct = direct;
  for (auto _ : state) benchmark::DoNotOptimize(spectra::is_pp_delta_criterion(inst.poly, opts).verdict);
}
BENCHMARK(BM_DeltaCriterion)->Args({3, 0})->Args({3, 1})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

static void BM_UniqueSolution(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto inst = families::gen_prop3(m, 3).front();
  const unit_circle::UnitCircle circle(inst.poly.ctx());
  spectra::EngineOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(spectra::unique_solution_check(circle, *inst.params, *inst.u, opts).verdict);
}
BENCHMARK(BM_UniqueSolution)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
