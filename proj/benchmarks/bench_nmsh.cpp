#include <random>

#include <benchmark/benchmark.h>

#include "nmsh/nmsh.hpp"

namespace {

nmsh::IntegerMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-9, 9);
    nmsh::IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
    }
    return m;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(nmsh::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_ElementaryDivisors(benchmark::State& state)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(nmsh::elementary_divisors(m));
}
BENCHMARK(BM_ElementaryDivisors)->RangeMultiplier(2)->Range(4, 32);

// Invariant with m pairs of pairwise coprime-ish alphas.
nmsh::SeifertInvariant seifert_of_size(long m)
{
    nmsh::SeifertInvariant s;
    s.genus = 2;
    for (long j = 0; j < m; ++j) s.pairs.push_back({j + 2, 1});
    return s;
}

void BM_SeifertHomologyViaFlow(benchmark::State& state)
{
    const auto s = seifert_of_size(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nmsh::homology(nmsh::to_chain_complex(nmsh::to_flow_complex(s))));
}
BENCHMARK(BM_SeifertHomologyViaFlow)->RangeMultiplier(2)->Range(2, 64);

void BM_SeifertHomologyClosedForm(benchmark::State& state)
{
    const auto s = seifert_of_size(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nmsh::seifert_homology_closed_form(s));
}
BENCHMARK(BM_SeifertHomologyClosedForm)->RangeMultiplier(2)->Range(2, 64);

} // namespace

// The packaged libbenchmark_main.a carries LTO bytecode from another compiler.
BENCHMARK_MAIN();
