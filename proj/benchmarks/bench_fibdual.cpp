#include <benchmark/benchmark.h>

#include "fibdual/binet.hpp"
#include "fibdual/identities.hpp"
#include "fibdual/sequences.hpp"

using namespace fibdual;

static void FibFastDoubling(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fib(n));
  }
}
BENCHMARK(FibFastDoubling)->Arg(100)->Arg(1000)->Arg(10000)->Arg(100000);

static void DualQuatProduct(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  DualQuaternion<BigInt> a = dual_quat(SeqKind::Fibonacci, n);
  DualQuaternion<BigInt> b = dual_quat(SeqKind::Lucas, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(DualQuatProduct)->Arg(10)->Arg(100)->Arg(1000);

static void BinetClosedForm(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binet_dual_quat(SeqKind::Fibonacci, n));
  }
}
BENCHMARK(BinetClosedForm)->Arg(10)->Arg(100);

static void CheckRecurrenceIdentity(benchmark::State& state) {
  const IdentityRecord* rec = find_identity("T1.1");
  CheckOptions opts;
  opts.cross_check = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_range(*rec, default_ranges(*rec), opts));
  }
}
BENCHMARK(CheckRecurrenceIdentity)->Arg(0)->Arg(1);

static void CheckTwoIndexIdentity(benchmark::State& state) {
  const IdentityRecord* rec = find_identity("T1.3");
  CheckOptions opts;
  opts.execution = state.range(0) != 0 ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_range(*rec, default_ranges(*rec), opts));
  }
}
BENCHMARK(CheckTwoIndexIdentity)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
