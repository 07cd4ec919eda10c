#include <benchmark/benchmark.h>

#include <random>

#include "isoform/formality.hpp"
#include "isoform/matrix.hpp"
#include "isoform/weyl_group.hpp"

using namespace isoform;

namespace {

SimpleType st(const char* s) { return SimpleType::parse(s); }

void BM_EnumerateWeyl(benchmark::State& state, const char* label) {
  RootSystem rs = build_root_system(st(label));
  for (auto _ : state) {
    WeylGroup w = enumerate_weyl(rs);
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK_CAPTURE(BM_EnumerateWeyl, A3, "A3");
BENCHMARK_CAPTURE(BM_EnumerateWeyl, D4, "D4");
BENCHMARK_CAPTURE(BM_EnumerateWeyl, F4, "F4");
BENCHMARK_CAPTURE(BM_EnumerateWeyl, D6, "D6");
BENCHMARK_CAPTURE(BM_EnumerateWeyl, E6, "E6")->Unit(benchmark::kMillisecond);

void BM_RestrictionSet(benchmark::State& state, const char* label,
                       std::vector<int> permutation) {
  PairData p = resolve_fold(FoldSpec{st(label), std::move(permutation)});
  WeylGroup w = ambient_weyl(p.g);
  for (auto _ : state) {
    RestrictionSet h = restriction_set(w, p.tk);
    benchmark::DoNotOptimize(h.size());
  }
}
BENCHMARK_CAPTURE(BM_RestrictionSet, A5_fold, "A5", std::vector<int>{5, 4, 3, 2, 1});
BENCHMARK_CAPTURE(BM_RestrictionSet, D6_fold, "D6", std::vector<int>{1, 2, 3, 4, 6, 5})
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RestrictionSet, E6_fold, "E6", std::vector<int>{6, 2, 5, 4, 3, 1})
    ->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 5);
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
  for (auto _ : state) {
    QMatrix r = rref(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

void BM_AnalyzeTriality(benchmark::State& state) {
  PairData p = resolve_fold(FoldSpec{st("D4"), {3, 2, 4, 1}});
  for (auto _ : state) {
    FormalityReport r = analyze(p);
    benchmark::DoNotOptimize(r.dim_quotient);
  }
}
BENCHMARK(BM_AnalyzeTriality);

void BM_SubgroupClosure(benchmark::State& state) {
  RootSystem rs = build_root_system(st("F4"));
  WeylGroup w = enumerate_weyl(rs);
  std::vector<std::vector<int>> simples;
  for (int i = 0; i < rs.rank(); ++i) {
    std::vector<int> e(rs.rank(), 0);
    e[i] = 1;
    simples.push_back(e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(subgroup_order(w, simples));
}
BENCHMARK(BM_SubgroupClosure)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
