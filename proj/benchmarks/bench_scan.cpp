#include <benchmark/benchmark.h>

#include "extfair/allocators.hpp"
#include "extfair/enumerate.hpp"
#include "extfair/gen.hpp"
#include "extfair/mms.hpp"
#include "extfair/transform.hpp"

using namespace extfair;

namespace {

Instance2D make_instance(int n, int m, Kind kind) {
  GenSpec spec;
  spec.n = n;
  spec.m = m;
  spec.kind = kind;
  spec.seed = 1;
  return gen_instance(spec);
}

void BM_PartitionScan(benchmark::State& state) {
  const Instance2D inst =
      make_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                    Kind::Mixed);
  const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
  for (auto _ : state) {
    Rational best = 0;
    PartitionScanner(vs).run_all(
        [&](uint64_t, const std::vector<Rational>& sums, const std::vector<uint8_t>&) {
          if (sums[0] > best) best = sums[0];
        });
    benchmark::DoNotOptimize(best);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(allocation_count(inst.n, inst.m)));
}
BENCHMARK(BM_PartitionScan)->Args({2, 10})->Args({3, 8})->Args({3, 10});

void BM_MmsProfile(benchmark::State& state) {
  const Instance2D inst =
      make_instance(3, static_cast<int>(state.range(0)), Kind::Chores);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mms_profile(inst));
  }
}
BENCHMARK(BM_MmsProfile)->Arg(6)->Arg(8);

void BM_ExhaustiveLeximin(benchmark::State& state) {
  const Instance2D inst =
      make_instance(3, static_cast<int>(state.range(0)), Kind::Goods);
  const ValueSystem vs = ValueSystem::for_2d(inst, Space::V);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_opt(vs, OptObjective::LEXIMIN));
  }
}
BENCHMARK(BM_ExhaustiveLeximin)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
