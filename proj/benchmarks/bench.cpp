#include <benchmark/benchmark.h>

#include "specht/basis.hpp"
#include "specht/branching.hpp"
#include "specht/murphy.hpp"
#include "specht/sweeps.hpp"
#include "specht/tableau.hpp"

using namespace specht;

namespace {

void BM_EnumerateStandard(benchmark::State& state) {
    long n = state.range(0);
    Multipartition shape({{n - n / 2, n / 2}});  // two-row partition of n
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_standard(shape));
    }
}
BENCHMARK(BM_EnumerateStandard)->Arg(6)->Arg(8)->Arg(10);

void BM_GradedDimension(benchmark::State& state) {
    long n = state.range(0);
    QuiverParams params(3, {3, 0});
    std::vector<Multipartition> shapes = enumerate_multipartitions(n, 2);
    for (auto _ : state) {
        LaurentPoly total;
        for (const Multipartition& mu : shapes) {
            total += graded_dimension(mu, params);
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_GradedDimension)->Arg(4)->Arg(6);

void BM_InductionSweep(benchmark::State& state) {
    long n = state.range(0);
    QuiverParams params(2, {0});
    std::vector<Multipartition> shapes = enumerate_multipartitions(n, 1);
    for (auto _ : state) {
        for (const Multipartition& mu : shapes) {
            for (long i = 0; i < params.e; ++i) {
                benchmark::DoNotOptimize(induction_filtration(mu, i, params));
            }
        }
    }
}
BENCHMARK(BM_InductionSweep)->Arg(6)->Arg(8);

void BM_EngineProduct(benchmark::State& state) {
    HeckeAlgebra<Rational> algebra(make_semisimple_params(3, 2));
    Multipartition mu({{2, 1}, {}});
    std::vector<Tableau> stds = enumerate_standard(mu);
    HeckeElement<Rational> m = murphy_m_pair(algebra, stds.front(), stds.back());
    HeckeElement<Rational> n = murphy_n_pair(algebra, stds.back(), stds.front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(algebra.mul(m, n));
    }
}
BENCHMARK(BM_EngineProduct);

void BM_PairBasisBuild(benchmark::State& state) {
    for (auto _ : state) {
        HeckeAlgebra<Rational> algebra(make_semisimple_params(2, 2));
        PairBasis<Rational> basis(algebra, true);
        benchmark::DoNotOptimize(basis.size());
    }
}
BENCHMARK(BM_PairBasisBuild);

}  // namespace

BENCHMARK_MAIN();
