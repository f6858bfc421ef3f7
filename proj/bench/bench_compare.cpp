#include <benchmark/benchmark.h>

#include "cpcompat/comparison.hpp"
#include "support/generators.hpp"

using namespace cpcompat;

namespace {

// Wide, moderately deep policy so the aligned-pair batch is large.
Policy wide_policy(std::uint64_t seed, std::size_t roots) {
  testing::Rng rng(seed);
  Policy p;
  p.name = "bench";
  for (std::uint32_t i = 1; i <= roots; ++i) {
    p.roots.push_back(testing::random_paragraph(rng, NumberPath({i}), 4));
  }
  return p;
}

void run_compare(benchmark::State& state, Execution exec) {
  const auto roots = static_cast<std::size_t>(state.range(0));
  const auto a = wide_policy(1, roots);
  const auto b = wide_policy(2, roots);
  for (auto _ : state) {
    auto report = compare(a, b, ComparisonMode::kMerge, exec);
    benchmark::DoNotOptimize(report.overall_weighted);
  }
  state.counters["paragraphs"] = static_cast<double>(align(a, b).size());
}

void BM_CompareSerial(benchmark::State& state) { run_compare(state, Execution::kSerial); }
void BM_CompareParallel(benchmark::State& state) { run_compare(state, Execution::kParallel); }

void run_score_pairs(benchmark::State& state, Execution exec) {
  const auto a = wide_policy(3, static_cast<std::size_t>(state.range(0)));
  const auto b = wide_policy(4, static_cast<std::size_t>(state.range(0)));
  const auto pairs = align(a, b);
  for (auto _ : state) {
    auto scores = score_pairs(pairs, ComparisonMode::kMerge, exec);
    benchmark::DoNotOptimize(scores.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pairs.size()));
}

void BM_ScorePairsSerial(benchmark::State& state) { run_score_pairs(state, Execution::kSerial); }
void BM_ScorePairsParallel(benchmark::State& state) {
  run_score_pairs(state, Execution::kParallel);
}

}  // namespace

BENCHMARK(BM_CompareSerial)->Arg(50)->Arg(500);
BENCHMARK(BM_CompareParallel)->Arg(50)->Arg(500);
BENCHMARK(BM_ScorePairsSerial)->Arg(50)->Arg(500);
BENCHMARK(BM_ScorePairsParallel)->Arg(50)->Arg(500);

BENCHMARK_MAIN();
