#include <benchmark/benchmark.h>

#include "bhepn/classify.hpp"
#include "bhepn/epn.hpp"
#include "bhepn/hubbard.hpp"
#include "bhepn/io.hpp"
#include "bhepn/linalg.hpp"

using namespace bhepn;

static void BM_BhBlock(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hubbard::bh_block(n, 0.7));
    }
}
BENCHMARK(BM_BhBlock)->Arg(8)->Arg(32)->Arg(64);

static void BM_FockBlock(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hubbard::fock_block(n - 1, 0.7));
    }
}
BENCHMARK(BM_FockBlock)->Arg(8)->Arg(32);

static void BM_Eigenvalues(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix h = hubbard::bh_block(n, 0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::eigenvalues(h));
    }
}
BENCHMARK(BM_Eigenvalues)->Arg(8)->Arg(16)->Arg(32);

static void BM_Svd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ComplexMatrix h = hubbard::bh_block(n, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::svd(h));
    }
}
BENCHMARK(BM_Svd)->Arg(8)->Arg(16)->Arg(32);

static void BM_DirectSum(benchmark::State& state) {
    const ModelConfig config = ModelConfig::make(12, {2, 2, 2, 2, 2, 2}, {1, 3, 5, 7, 9, 11});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hubbard::direct_sum_hamiltonian(config, 0.5));
    }
}
BENCHMARK(BM_DirectSum);

static void BM_EnumerateModels(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify::enumerate_models(n));
    }
}
BENCHMARK(BM_EnumerateModels)->Arg(10)->Arg(15)->Arg(20);

static void BM_TransitionMatrix(benchmark::State& state) {
    const ModelConfig config = ModelConfig::make(8, {4, 2, 2}, {1, 5, 7});
    for (auto _ : state) {
        benchmark::DoNotOptimize(epn::transition_matrix(config));
    }
}
BENCHMARK(BM_TransitionMatrix);

static void BM_SegreCharacteristic(benchmark::State& state) {
    const ComplexMatrix h = hubbard::direct_sum_hamiltonian(
        ModelConfig::make(10, {4, 2, 2, 2}, {1, 5, 7, 9}), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(epn::segre_characteristic(h));
    }
}
BENCHMARK(BM_SegreCharacteristic);

static void BM_SweepCsv(benchmark::State& state) {
    const io::SweepRequest request{ModelConfig::single_block(8), 0.0, 1.0,
                                   static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(io::sweep_csv(request));
    }
}
BENCHMARK(BM_SweepCsv)->Arg(101)->Arg(1001);

BENCHMARK_MAIN();
