#include <benchmark/benchmark.h>

#include <random>

#include "cuntz/element.hpp"
#include "cuntz/parafermion.hpp"
#include "cuntz/representation.hpp"
#include "cuntz/rfs.hpp"
#include "cuntz/text.hpp"

using namespace cuntz;

// Embedded generator A_n for the one-seed system; term count grows like 2^(n-1).
static void BM_EmbedGenerator(benchmark::State& state) {
  const RfsSystem o2 = standard_rfs_o2();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t terms = 0;
  for (auto _ : state) {
    const Element a = o2.embed_generator(n);
    terms = a.size();
    benchmark::DoNotOptimize(terms);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_EmbedGenerator)->DenseRange(2, 14, 4);

static void BM_CarSweep(benchmark::State& state) {
  const RfsSystem sys = standard_rfs_p(static_cast<unsigned>(state.range(0)));
  const auto N = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_car(sys, N).passed());
}
BENCHMARK(BM_CarSweep)->Args({1, 8})->Args({2, 8})->Args({3, 9});

static void BM_NormalForm(benchmark::State& state) {
  const unsigned d = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<unsigned> letter(1, d);
  Element x(d);
  for (int k = 0; k < 64; ++k) {
    Monomial m;
    for (int i = 0; i < 3; ++i) m.create.push_back(letter(rng));
    for (int i = 0; i < 2; ++i) m.annihilate.push_back(letter(rng));
    x.add_term(m, k % 5 + 1);
    x += raise_monomial(m, d) * Coefficient(-1);
  }
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(x).size());
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(4)->Arg(8);

static void BM_Normalization(benchmark::State& state) {
  const RfsSystem sys = standard_rfs_p(static_cast<unsigned>(state.range(0)));
  const auto depth = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_normalization(sys, depth).passed());
}
BENCHMARK(BM_Normalization)->Args({1, 3})->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_Trilinear(benchmark::State& state) {
  const GreenSystem g = standard_rpfs_p(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_trilinear(g, 2).passed());
}
BENCHMARK(BM_Trilinear)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_RepApply(benchmark::State& state) {
  const RfsSystem o2 = standard_rfs_o2();
  const Element a = o2.embed_generator(static_cast<std::size_t>(state.range(0)));
  const StateVector v = StateVector::basis(1);
  for (auto _ : state) benchmark::DoNotOptimize(rep_apply(adjoint(a), v).is_zero());
}
BENCHMARK(BM_RepApply)->Arg(4)->Arg(10);
BENCHMARK_MAIN();
