#include <benchmark/benchmark.h>

#include "localcert/bits.hpp"

using namespace localcert;

static void BM_varint_roundtrip(benchmark::State& state) {
  for (auto _ : state) {
    BitString b;
    for (std::uint64_t v = 0; v < 64; ++v) b.append_varint(v * v * 31 + 7);
    BitReader r(b);
    std::uint64_t sum = 0;
    for (int i = 0; i < 64; ++i) sum += r.read_varint();
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_varint_roundtrip);

BENCHMARK_MAIN();
