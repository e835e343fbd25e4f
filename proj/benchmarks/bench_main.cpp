#include <benchmark/benchmark.h>

#include "palg/corpus.hpp"
#include "palg/lattice.hpp"
#include "palg/polynomial.hpp"
#include "palg/theorems.hpp"

namespace {

palg::Matrix dense(palg::Field f, std::size_t n) {
    palg::Matrix m(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = palg::Scalar::from_int(f, static_cast<long long>((r * 7 + c * 3 + r * c) % 11) - 5);
    return m;
}

void BM_RrefRationals(benchmark::State& state) {
    const auto m = dense(palg::Field::rationals(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(m.row_space());
}
BENCHMARK(BM_RrefRationals)->Arg(8)->Arg(16)->Arg(32);

void BM_RrefPrime(benchmark::State& state) {
    const auto m = dense(palg::Field::prime(7), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(m.row_space());
}
BENCHMARK(BM_RrefPrime)->Arg(8)->Arg(16)->Arg(32);

void BM_CharPoly(benchmark::State& state) {
    const auto m = dense(palg::Field::rationals(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(palg::char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(16);

void BM_SubspaceEnumeration(benchmark::State& state) {
    const auto q = static_cast<std::uint32_t>(state.range(1));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(palg::enumerate_subspaces(palg::Field::prime(q), n, {}));
}
BENCHMARK(BM_SubspaceEnumeration)->Args({4, 2})->Args({5, 2})->Args({4, 3});

void BM_EnumerateStructures(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(palg::enumerate_poisson_structures(2, 3));
}
BENCHMARK(BM_EnumerateStructures)->Unit(benchmark::kMillisecond);

void BM_Frattini(benchmark::State& state) {
    const auto f = palg::Field::prime(3);
    const auto p = palg::direct_sum(palg::constructions::idempotent_line(f), palg::constructions::heisenberg_zero_dot(f));
    for (auto _ : state) benchmark::DoNotOptimize(palg::frattini(p, {}));
}
BENCHMARK(BM_Frattini)->Unit(benchmark::kMillisecond);

void BM_SuiteCurated(benchmark::State& state) {
    const auto corpus = palg::curated_corpus();
    palg::SuiteOptions o;
    o.budget.max_q = 5;
    o.identity_samples = 100;
    for (auto _ : state) benchmark::DoNotOptimize(palg::run_suite(corpus, o));
}
BENCHMARK(BM_SuiteCurated)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace
BENCHMARK_MAIN();
