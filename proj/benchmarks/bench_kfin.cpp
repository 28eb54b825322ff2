#include <benchmark/benchmark.h>

#include "kfin/formulas.hpp"
#include "kfin/trace.hpp"

using namespace kfin;

static void BM_FfinSymmetric(benchmark::State& state) {
  const auto g = Group::from_text("S" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ffin(*g).f_value);
}
BENCHMARK(BM_FfinSymmetric)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_FfinDihedral(benchmark::State& state) {
  const auto g = Group::from_text("D" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_ffin(*g).f_value);
}
BENCHMARK(BM_FfinDihedral)->Arg(10)->Arg(40)->Arg(160)->Unit(benchmark::kMicrosecond);

static void BM_FfinRadiusBounded(benchmark::State& state) {
  const auto g = Group::from_text("Dinf x Z/2");
  const TorsionOptions options{FfinMethod::RadiusBounded, static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(compute_ffin(*g, options).f_value);
}
BENCHMARK(BM_FfinRadiusBounded)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EnumerateBall(benchmark::State& state) {
  const auto g = Group::from_text("Heis");
  const auto r = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g->enumerate_ball(r).size());
}
BENCHMARK(BM_EnumerateBall)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyGrowth(benchmark::State& state) {
  const auto g = Group::from_text("Heis");
  const auto a = g->parse_element("a");
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_growth(*g, a, 8).cumulative.back());
}
BENCHMARK(BM_ConjugacyGrowth)->Unit(benchmark::kMillisecond);

static void BM_TraceMatrix(benchmark::State& state) {
  const auto g = Group::from_text(state.range(0) == 0 ? "S5" : "D40");
  for (auto _ : state) benchmark::DoNotOptimize(trace_matrix(*g).rank);
}
BENCHMARK(BM_TraceMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_RationalRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(BigInt(static_cast<long>((i * 7 + j * 3) % 11) - 5), BigInt(static_cast<unsigned long>(1 + (i + j) % 4)));
  for (auto _ : state) benchmark::DoNotOptimize(rational_rank(m));
}
BENCHMARK(BM_RationalRank)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_PartitionCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(partition_count(200));
}
BENCHMARK(BM_PartitionCount);
BENCHMARK_MAIN();
