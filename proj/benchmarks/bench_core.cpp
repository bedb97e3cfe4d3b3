#include <benchmark/benchmark.h>

#include "helstromflow/dephasing.hpp"
#include "helstromflow/eig.hpp"
#include "helstromflow/random_states.hpp"
#include "helstromflow/states.hpp"

using namespace hflow;

static void BM_HermitianEig(benchmark::State& state) {
    Rng rng(mix_seed({900, static_cast<std::uint64_t>(state.range(0))}));
    const auto h = random_hermitian(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto eig = hermitian_eig(h);
        benchmark::DoNotOptimize(eig.eigenvalues.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32)->Arg(80)->Arg(128)->Complexity();

static void BM_TraceDistance(benchmark::State& state) {
    Rng rng(mix_seed({901}));
    const auto r1 = random_density_operator(rng, static_cast<std::size_t>(state.range(0)));
    const auto r2 = random_density_operator(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(trace_distance(r1, r2));
    }
}
BENCHMARK(BM_TraceDistance)->Arg(4)->Arg(9)->Arg(16);

static void BM_ScanCell(benchmark::State& state) {
    ScanConfig scan;
    scan.p1_grid = {0.6};
    scan.lambda_grid = {0.5};
    scan.samples = static_cast<std::size_t>(state.range(0));
    scan.seed = 3;
    const DephasingConfig cfg;
    for (auto _ : state) {
        auto records = scan_detection(scan, cfg);
        benchmark::DoNotOptimize(records.data());
    }
}
BENCHMARK(BM_ScanCell)->Arg(100)->Arg(500);

static void BM_BruteForceReducedState(benchmark::State& state) {
    DephasingConfig cfg;
    cfg.lambda = 0.5;
    for (auto _ : state) {
        auto rho = brute_force_reduced_state(cfg, 1.5, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(rho.matrix().data().data());
    }
}
BENCHMARK(BM_BruteForceReducedState)->Arg(20)->Arg(40);

BENCHMARK_MAIN();
