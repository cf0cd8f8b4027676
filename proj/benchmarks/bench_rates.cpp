#include <benchmark/benchmark.h>

#include "icrates/channel.hpp"
#include "icrates/numerics.hpp"
#include "icrates/rates2.hpp"
#include "icrates/ratesk.hpp"
#include "icrates/verify.hpp"

using namespace icrates;

namespace {

void BM_MiGaussian(benchmark::State& state) {
    double s = 100.0, r = 3.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mi_gaussian(s, r));
    }
}
BENCHMARK(BM_MiGaussian);

void BM_Classify2Sym(benchmark::State& state) {
    const Channel2Sym ch(100.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify2sym(ch));
    }
}
BENCHMARK(BM_Classify2Sym);

void BM_ClassifyKSym(benchmark::State& state) {
    const ChannelKSym ch(static_cast<int>(state.range(0)), 1e4, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classifyKsym(ch));
    }
}
BENCHMARK(BM_ClassifyKSym)->Arg(3)->Arg(12)->Arg(60);

void BM_RateSymP2p(benchmark::State& state) {
    const Channel2Sym ch(100.0, 0.07);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_sym_p2p(ch).value);
    }
}
BENCHMARK(BM_RateSymP2p);

void BM_RateSymEtw(benchmark::State& state) {
    const Channel2Sym ch(100.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_sym_etw(ch).value);
    }
}
BENCHMARK(BM_RateSymEtw);

void BM_FindA0(benchmark::State& state) {
    double p = 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(numerics::find_a0(p));
    }
}
BENCHMARK(BM_FindA0);

void BM_EtwKClosed(benchmark::State& state) {
    const ChannelKSym ch(static_cast<int>(state.range(0)), 50.0, 0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_sym_etwK_closed(ch).rate.value);
    }
}
BENCHMARK(BM_EtwKClosed)->Arg(3)->Arg(8);

void BM_P2pKOracle(benchmark::State& state) {
    const ChannelKSym ch(static_cast<int>(state.range(0)), 50.0, 0.4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rate_sym_p2pK_oracle(ch).rate.value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_P2pKOracle)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_RegionVertices(benchmark::State& state) {
    const Channel2Sym ch(1.0, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(region_vertices(ch, Region2::Capacity).size());
    }
}
BENCHMARK(BM_RegionVertices);

void BM_VerifyThm1Grid(benchmark::State& state) {
    verify::Spec spec;
    spec.grid_p = static_cast<int>(state.range(0));
    spec.grid_a = spec.grid_p;
    spec.threads = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify::verify_thm1_noisy(spec).worst_margin);
    }
}
BENCHMARK(BM_VerifyThm1Grid)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
