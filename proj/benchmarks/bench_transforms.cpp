#include <benchmark/benchmark.h>

#include "qfourier/qfourier.hpp"

using namespace qfourier;

namespace {

QSignal bench_signal(std::size_t n) {
    Rng rng{n};
    return random_signal(FiniteAbelianGroup::cyclic(n), rng);
}

void BM_RqftFast(benchmark::State& state) {
    const QSignal f = bench_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rqft_fast(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}

void BM_RqftDirect(benchmark::State& state) {
    const QSignal f = bench_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rqft_direct(f));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}

void BM_IrqftFast(benchmark::State& state) {
    const QSpectrum F = rqft_fast(bench_signal(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(irqft_fast(F));
}

void BM_SqftFast(benchmark::State& state) {
    const QSignal f = bench_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(sqft_fast(f));
}

void BM_LqftFast(benchmark::State& state) {
    const QSignal f = bench_signal(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lqft_fast(f));
}

void BM_Dft1d(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    FftPlan plan{n};
    std::vector<cplx> data(n, cplx{1.0, -0.5});
    for (auto _ : state) {
        plan.execute(data, -1);
        benchmark::DoNotOptimize(data.data());
    }
    state.SetComplexityN(state.range(0));
}

void BM_SmoothFejer(benchmark::State& state) {
    const QSignal f = bench_signal(static_cast<std::size_t>(state.range(0)));
    const KernelFamily family = builtin_family("fejer", f.group());
    for (auto _ : state) benchmark::DoNotOptimize(smooth(f, family, 4));
}

}  // namespace

BENCHMARK(BM_RqftFast)->RangeMultiplier(2)->Range(8, 256)->Arg(12)->Arg(67)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RqftDirect)->Arg(8)->Arg(16)->Arg(32)->Arg(48)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_IrqftFast)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SqftFast)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LqftFast)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);
// Powers of two, a mixed radix and primes on either side of the chirp-z cutoff.
BENCHMARK(BM_Dft1d)->Arg(256)->Arg(1024)->Arg(360)->Arg(61)->Arg(67)->Arg(1009)->Complexity();
BENCHMARK(BM_SmoothFejer)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
