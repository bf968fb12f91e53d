// Serial reference loop vs OpenMP partitions on generated collections.
// Results are identical by construction; only wall time differs.

#include <benchmark/benchmark.h>

#include <map>

#include "dimspan/engine.hpp"
#include "dimspan/genbench.hpp"

namespace {

using namespace dimspan;

const GraphCollection& collection(std::size_t n) {
  static std::map<std::size_t, GraphCollection> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate({n, 7})).first;
  return it->second;
}

void run(benchmark::State& state, Execution execution) {
  const auto& c = collection(static_cast<std::size_t>(state.range(0)));
  MiningConfig cfg;
  cfg.min_support = static_cast<double>(state.range(1)) / 100.0;
  cfg.workers = static_cast<std::size_t>(state.range(2));
  cfg.execution = execution;
  std::size_t patterns = 0;
  for (auto _ : state) {
    const auto r = mine(c, cfg);
    patterns = r.frequent.size();
    benchmark::DoNotOptimize(patterns);
  }
  state.counters["patterns"] = static_cast<double>(patterns);
  state.counters["graphs/s"] =
      benchmark::Counter(static_cast<double>(c.size()), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_MineSerial(benchmark::State& state) { run(state, Execution::serial); }
void BM_MineParallel(benchmark::State& state) { run(state, Execution::parallel); }

// Args: graph count, support in percent, workers.
void args(benchmark::internal::Benchmark* b) {
  for (const int n : {1000, 4000}) {
    for (const int s : {100, 90}) {
      for (const int w : {1, 2, 4}) b->Args({n, s, w});
    }
  }
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_MineSerial)->Apply(args);
BENCHMARK(BM_MineParallel)->Apply(args);

BENCHMARK_MAIN();
