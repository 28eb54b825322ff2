#include <benchmark/benchmark.h>

#include "verify.hpp"

static void BM_VerifyDefaultCorpus(benchmark::State& state) {
  const auto corpus = kfin::app::default_corpus();
  kfin::app::VerifyOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kfin::app::run_verify(corpus, options).ok);
}
BENCHMARK(BM_VerifyDefaultCorpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);
