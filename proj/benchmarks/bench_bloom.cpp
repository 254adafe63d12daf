#include <benchmark/benchmark.h>

#include <string>

#include "opinion/bloom_filter.hpp"

static void BM_BloomInsert(benchmark::State& state) {
  opinion::BloomFilter filter(1u << 20, 7, 42);
  uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter.check_and_insert("key:" + std::to_string(i++)));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BloomInsert);

static void BM_BloomLookupMiss(benchmark::State& state) {
  opinion::BloomFilter filter(1u << 20, 7, 42);
  for (uint64_t i = 0; i < 100000; ++i) {
    filter.check_and_insert("key:" + std::to_string(i));
  }
  uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter.contains("miss:" + std::to_string(i++)));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BloomLookupMiss);

static void BM_BloomLookupHit(benchmark::State& state) {
  opinion::BloomFilter filter(1u << 20, 7, 42);
  for (uint64_t i = 0; i < 100000; ++i) {
    filter.check_and_insert("key:" + std::to_string(i));
  }
  uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter.contains("key:" + std::to_string(i++ % 100000)));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BloomLookupHit);

BENCHMARK_MAIN();
