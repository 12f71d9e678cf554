#include "pdloop/attach.hpp"
#include "pdloop/fp_matrix.hpp"
#include "pdloop/loop_algebra.hpp"
#include "pdloop/spectral_oracle.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pdloop;

namespace {

PDComplexSpec identity_spec(int m, int k)
{
    PDComplexSpec s;
    s.p = 5;
    s.n = 2 * m;
    s.k = k;
    s.k1 = 0;
    s.A = FpMatrix::identity(Zp(5), k);
    return s;
}

void BM_QuotientDims(benchmark::State& state)
{
    const auto spec = identity_spec(3, static_cast<int>(state.range(0)));
    const int cap = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_dims(spec, cap));
}
BENCHMARK(BM_QuotientDims)->Args({1, 60})->Args({2, 36})->Args({3, 30})->Args({4, 22})->Unit(benchmark::kMillisecond);

void BM_MatrixRank(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 gen(1);
    FpMatrix A(Zp(32003), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.set(i, j, static_cast<long long>(gen() % 32003));
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_rank(A));
}
BENCHMARK(BM_MatrixRank)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_SpectralReplay(benchmark::State& state)
{
    const auto g = to_general(identity_spec(3, static_cast<int>(state.range(0))));
    const int cap = static_cast<int>(state.range(1));
    const QuotientAlgebra A(build_chi_general(g), cap + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_acyclic(build_pages(g, A, cap), cap));
}
BENCHMARK(BM_SpectralReplay)->Args({1, 30})->Args({2, 24})->Args({3, 20})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
