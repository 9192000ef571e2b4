#include <benchmark/benchmark.h>

#include "quasi/exact.hpp"
#include "quasi/farness.hpp"
#include "quasi/numtheory.hpp"
#include "quasi/streaming.hpp"
#include "quasi/tester.hpp"

namespace {

using namespace quasi;

Text coverable(std::size_t n) {
  Rng rng(1);
  return gen_coverable(Text::from_alpha("abaab"), n, rng);
}

void BM_IsSeed(benchmark::State& state) {
  const Text s = coverable(static_cast<std::size_t>(state.range(0)));
  const Text c = Text::from_alpha("abaab");
  for (auto _ : state) benchmark::DoNotOptimize(is_seed(c, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IsSeed)->Range(1 << 8, 1 << 16);

void BM_IsSeedBruteforce(benchmark::State& state) {
  const Text s = coverable(static_cast<std::size_t>(state.range(0)));
  const Text c = Text::from_alpha("abaab");
  for (auto _ : state) benchmark::DoNotOptimize(is_seed_bruteforce(c, s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IsSeedBruteforce)->Range(1 << 8, 1 << 12);

void BM_CoverTester(benchmark::State& state) {
  const auto q = static_cast<std::size_t>(state.range(0));
  const Text s = coverable(100000);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    QueryOracle oracle(s);
    const Verdict v = run_cover_tester({q, s.size(), 0.25, ++seed}, oracle);
    benchmark::DoNotOptimize(v.answer);
    state.counters["queries"] = static_cast<double>(v.queries_used);
  }
}
BENCHMARK(BM_CoverTester)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Stream(benchmark::State& state) {
  const Text s = coverable(1 << 16);
  const auto q = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stream_shortest_cover(s, q));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_Stream)->DenseRange(4, 16, 4);

void BM_ShortestCover(benchmark::State& state) {
  const Text s = coverable(1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(shortest_cover(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_ShortestCover);

void BM_DistToCover(benchmark::State& state) {
  Rng rng(2);
  const Text s = gen_uniform(static_cast<std::size_t>(state.range(0)), 2, rng);
  const Text c = Text::from_alpha("abaab");
  for (auto _ : state) benchmark::DoNotOptimize(dist_to_cover(s, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DistToCover)->Range(1 << 8, 1 << 14);

void BM_ConicalRepresentable(benchmark::State& state) {
  const std::vector<std::size_t> gens{6, 9, 20};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conical_representable(gens, n));
}
BENCHMARK(BM_ConicalRepresentable)->Range(1 << 6, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
