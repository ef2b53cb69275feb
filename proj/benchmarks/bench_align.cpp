#include <benchmark/benchmark.h>

#include "stretchalign/generate.hpp"
#include "stretchalign/harness.hpp"

using namespace stretchalign;

namespace {

Sequence random_in(std::uint64_t seed, std::size_t len, Symbol lo, Symbol hi) {
  SplitMix64 rng{seed};
  Sequence s;
  s.reserve(len);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  for (std::size_t k = 0; k < len; ++k) {
    s.push_back(static_cast<Symbol>(lo + rng.next() % span));
  }
  return s;
}

void BM_align_identical(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence s = random_in(1, len, 0, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(align(s, s));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(len));
}
BENCHMARK(BM_align_identical)->Arg(1000)->Arg(5000);

void BM_align_same_distribution(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_in(2, len, 0, 15);
  const Sequence b = random_in(3, len, 0, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(align(a, b));
  }
}
BENCHMARK(BM_align_same_distribution)->Arg(1000)->Arg(5000);

// Fully mismatched inputs drive the critical path over the whole remainder:
// the quadratic worst case.
void BM_align_disjoint(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_in(4, len, 0, 7);
  const Sequence b = random_in(5, len, 8, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(align(a, b));
  }
}
BENCHMARK(BM_align_disjoint)->Arg(1000)->Arg(5000);

void BM_align_insertion_pair(benchmark::State& state) {
  const auto ins = static_cast<std::size_t>(state.range(0));
  const Sequence host = generate_excluding(DistributionSpec::gauss(2.0, 1.0, 5000, 6), 7);
  const Sequence variant = corrupt(host, InsertionSpec{7, ins, 0, 5000});
  for (auto _ : state) {
    benchmark::DoNotOptimize(align(host, variant));
  }
}
BENCHMARK(BM_align_insertion_pair)->Arg(100)->Arg(1000)->Arg(4000);

void BM_optimize_segment(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_in(7, len, 0, 15);
  const Sequence b = random_in(8, len, 0, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_segment(SegmentPair{a, b}));
  }
}
BENCHMARK(BM_optimize_segment)->Arg(30)->Arg(300);

void BM_oracle_optimize(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_in(9, len, 0, 15);
  const Sequence b = random_in(10, len, 0, 15);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_optimize(SegmentPair{a, b}));
  }
}
BENCHMARK(BM_oracle_optimize)->Arg(30)->Arg(300);

}  // namespace

BENCHMARK_MAIN();
