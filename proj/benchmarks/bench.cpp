#include <random>

#include <benchmark/benchmark.h>

#include "dforge/cusps.hpp"
#include "dforge/reduction.hpp"
#include "dforge/tate.hpp"

using namespace dforge;

namespace {

PolyA modulus(int which) {
  const auto f3 = Field::make(3, 1);
  const PolyA t = polya_T(f3);
  switch (which) {
    case 0: return t;
    case 1: return t * t;
    default: return t * t + polya_const(f3, 1);
  }
}

void BM_SkewMul(benchmark::State& st) {
  const auto k = Field::make(3, static_cast<std::uint32_t>(st.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, k->size() - 1);
  std::vector<Fe> a, b;
  for (int i = 0; i < 16; ++i) {
    a.emplace_back(k, d(rng));
    b.emplace_back(k, d(rng));
  }
  const SkewPoly<Fe> x(Fe(k, 0), 3, a), y(Fe(k, 0), 3, b);
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_SkewMul)->Arg(2)->Arg(6)->Arg(10);

void BM_Census(benchmark::State& st) {
  const PolyA f = modulus(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(census(f));
}
BENCHMARK(BM_Census)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Torsion(benchmark::State& st) {
  const auto f3 = Field::make(3, 1);
  const Fe two(f3, 2);
  const auto phi = dm_make_fq(two, {two, two.zero(), two.one()}, 3);
  const PolyA f = modulus(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(dm_torsion(phi, f));
}
BENCHMARK(BM_Torsion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TateModule(benchmark::State& st) {
  const auto u = rank1_universal(modulus(0));
  const auto lat = tate_lattice(u);
  for (auto _ : st) benchmark::DoNotOptimize(tate_module(lat, st.range(0)));
}
BENCHMARK(BM_TateModule)->Arg(9)->Arg(18)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_DrinfeldApprox(benchmark::State& st) {
  const auto u = rank1_universal(modulus(0));
  const auto te = tate_module(tate_lattice(u), st.range(0));
  const auto sp = specialisation_make(u, 2);
  const auto phi = sp.module(te.phi);
  for (auto _ : st) benchmark::DoNotOptimize(drinfeld_approx(phi, 3));
}
BENCHMARK(BM_DrinfeldApprox)->Arg(9)->Arg(27)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
