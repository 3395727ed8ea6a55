#include <optional>
#include <random>

#include <benchmark/benchmark.h>

#include "adrcode/engine.hpp"
#include "adrcode/scoring.hpp"
#include "synthetic.hpp"

namespace {

const adrcode::Terminology& terminology() {
  static const auto t = adrcode::testing::synthetic_terminology();
  return t;
}

const adrcode::Engine& engine() {
  static const adrcode::Engine e(terminology(), {});
  return e;
}

void BM_BuildIndexes(benchmark::State& state) {
  for (auto _ : state) {
    adrcode::Engine e(terminology(), {});
    benchmark::DoNotOptimize(e.exact_index().key_count());
  }
  state.counters["terms"] = static_cast<double>(terminology().size());
}
BENCHMARK(BM_BuildIndexes)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_EncodeChars(benchmark::State& state) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(state.range(0)));
  const auto text = adrcode::testing::synthetic_description(
      engine().terminology(), static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(engine().encode(text));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_EncodeChars)->Arg(20)->Arg(40)->Arg(100)->Arg(255)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_VoteWords(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto text = adrcode::testing::synthetic_description_words(
      engine().terminology(), static_cast<std::size_t>(state.range(0)), rng);
  const auto clean = engine().preprocess(text);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adrcode::vote(clean, engine().exact_index(), &engine().stemmed_index()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_VoteWords)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oN);

void BM_PairDistance(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(adrcode::pair_distance("edema della glottide", "edema glottide"));
  }
}
BENCHMARK(BM_PairDistance);

}  // namespace

BENCHMARK_MAIN();
