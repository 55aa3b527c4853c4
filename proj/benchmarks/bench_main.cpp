#include <benchmark/benchmark.h>

#include "grassbal/cohomology.hpp"
#include "grassbal/fp_matrix.hpp"
#include "grassbal/induction.hpp"
#include "grassbal/predictor.hpp"

using namespace grassbal;

static void BM_TangentType(benchmark::State& state) {
    for (auto _ : state) {
        for (std::int64_t d = 0; d <= 100; ++d) benchmark::DoNotOptimize(tangent_restriction_type(7, 11, d));
    }
}
BENCHMARK(BM_TangentType);

static void BM_KernelDense(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PrimeField F;
    Rng rng(7);
    FpMatrix m(F, n, n + n / 4);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = static_cast<Residue>(rng() % F.modulus());
    }
    for (auto _ : state) benchmark::DoNotOptimize(matrix_kernel(m));
}
BENCHMARK(BM_KernelDense)->Arg(64)->Arg(128)->Arg(256);

static void BM_NormalSplitting(benchmark::State& state) {
    const auto a = state.range(0), b = state.range(1), d = state.range(2);
    const CurveChart chart = sample_chart(a, b, d, PrimeField::kGeneralModulus, 11);
    for (auto _ : state) benchmark::DoNotOptimize(normal_splitting(chart));
}
BENCHMARK(BM_NormalSplitting)->Args({1, 3, 4})->Args({2, 3, 5})->Args({3, 4, 6});

static void BM_Certify(benchmark::State& state) {
    for (auto _ : state) {
        Certifier c;
        benchmark::DoNotOptimize(c.certify({6, 6, 20, 8}));
    }
}
BENCHMARK(BM_Certify);

static void BM_LemmaSweep(benchmark::State& state) {
    const ParamBox box{2, 10, 2, 10, 1, 40, 0, 20};
    for (auto _ : state) benchmark::DoNotOptimize(sweep_lemmas(box));
}
BENCHMARK(BM_LemmaSweep);
BENCHMARK_MAIN();
