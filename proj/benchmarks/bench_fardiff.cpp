#include <benchmark/benchmark.h>

#include <random>

#include "fardiff/fardiff.hpp"

namespace {

using fardiff::Index;
using fardiff::RowMatrix;

RowMatrix random_points(Index n, Index m) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    RowMatrix x(n, m);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < m; ++j) x(i, j) = g(rng);
    return x;
}

void BM_Affinity(benchmark::State& state) {
    const RowMatrix x = random_points(state.range(0), 10);
    for (auto _ : state) benchmark::DoNotOptimize(fardiff::gaussian_affinity(x, 1.0, int(state.range(1))));
}
BENCHMARK(BM_Affinity)->Args({500, 1})->Args({500, 4})->Args({2000, 1})->Args({2000, 4});

void BM_Decompose(benchmark::State& state) {
    const auto model = fardiff::markov_normalize(fardiff::gaussian_affinity(random_points(state.range(0), 5), 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(fardiff::spectral_decompose(model));
}
BENCHMARK(BM_Decompose)->Arg(100)->Arg(300)->Arg(1000);

void BM_Train(benchmark::State& state) {
    const RowMatrix x = fardiff::minmax_normalize(random_points(state.range(0), 3));
    fardiff::ArtParams p;
    p.rho = 0.8;
    for (auto _ : state) benchmark::DoNotOptimize(fardiff::train(x, p));
}
BENCHMARK(BM_Train)->Arg(200)->Arg(2000);

void BM_Pipeline(benchmark::State& state) {
    const auto data = fardiff::generate_rings(fardiff::RingSpec{});
    fardiff::FardiffConfig c;
    c.sigma = 0.3;
    c.dims = 1;
    c.skip_trivial = true;
    for (auto _ : state) benchmark::DoNotOptimize(fardiff::fardiff_cluster(data, c));
}
BENCHMARK(BM_Pipeline);

}  // namespace

BENCHMARK_MAIN();
