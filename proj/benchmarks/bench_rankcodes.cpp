#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "rmc/counting.hpp"
#include "rmc/delsarte.hpp"
#include "rmc/finite_field.hpp"
#include "rmc/matrix_space.hpp"
#include "rmc/qcalc.hpp"
#include "rmc/verify.hpp"

using namespace rmc;

static void BM_FieldMul(benchmark::State& state) {
    auto f = FieldSpec::get(static_cast<std::uint32_t>(state.range(0)),
                            static_cast<unsigned>(state.range(1)));
    std::vector<FieldElement> elems;
    for (std::uint32_t v = 0; v < f->cardinality(); ++v) elems.push_back(f->element(v));
    std::size_t i = 1, j = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elems[i] * elems[j]);
        if (++j == elems.size()) j = 1;
        if (j == i && ++i == elems.size()) i = 1;
    }
}
BENCHMARK(BM_FieldMul)->Args({2, 8})->Args({3, 5})->Args({257, 1});

static void BM_MatrixRank(benchmark::State& state) {
    auto f = FieldSpec::get(3, 1);
    gen::Rng rng(7);
    const int n = static_cast<int>(state.range(0));
    std::vector<MatrixFq> mats;
    for (int t = 0; t < 64; ++t) mats.push_back(gen::random_matrix(rng, *f, n, n));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank(mats[i]));
        if (++i == mats.size()) i = 0;
    }
}
BENCHMARK(BM_MatrixRank)->Arg(4)->Arg(8)->Arg(16);

static DelsarteCode bench_code(int dim) {
    auto f = FieldSpec::get(2, 1);
    gen::Rng rng(11);
    return gen::random_code(rng, *f, 4, 4, dim);
}

// Same dim-10 code both ways; the route is picked by budget. A large budget
// enumerates the 2^10 codewords, a budget of 512 only fits the 2^6 dual.
static void BM_RankDistEnumeration(benchmark::State& state) {
    DelsarteCode c = bench_code(10);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_distribution_with_route(c, 1u << 30));
}
BENCHMARK(BM_RankDistEnumeration);

static void BM_RankDistDualTransform(benchmark::State& state) {
    DelsarteCode c = bench_code(10);
    for (auto _ : state) benchmark::DoNotOptimize(rank_distribution_with_route(c, 512));
}
BENCHMARK(BM_RankDistDualTransform);

static void BM_CensusBruteforce(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const int m = static_cast<int>(state.range(2));
    for (auto _ : state) benchmark::DoNotOptimize(census_bruteforce(q, k, m, 1u << 30));
}
BENCHMARK(BM_CensusBruteforce)->Args({2, 3, 3})->Args({3, 2, 3})->Args({4, 2, 2});

static void BM_CountRankHtraceRecursive(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(count_rank_htrace_recursive(4, 3, 4, 2, 3));
}
BENCHMARK(BM_CountRankHtraceRecursive);

static void BM_QBinomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial(2, n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
