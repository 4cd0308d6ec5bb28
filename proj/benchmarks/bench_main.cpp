#include <benchmark/benchmark.h>

#include "hgl/galois.hpp"

using namespace hgl;

namespace {

/// Deterministic dense n x n matrix with entries in a small range.
Matrix dense(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, Scalar(f, static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5));
    return m;
}

void BM_RrefPrime(benchmark::State& state)
{
    const Matrix m = dense(Field::prime(3), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(16)->Arg(64)->Arg(128);

void BM_RrefRational(benchmark::State& state)
{
    const Matrix m = dense(Field::rational(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16)->Arg(32);

void BM_EnumerateSubspaces(benchmark::State& state)
{
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(Field::prime(3), n, n));
}
BENCHMARK(BM_EnumerateSubspaces)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateRicosSweedler(benchmark::State& state)
{
    const HopfAlgebra h = sweedler(Field::prime(3));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ricos(h));
}
BENCHMARK(BM_EnumerateRicosSweedler);

void BM_EnumerateRicosS3(benchmark::State& state)
{
    const HopfAlgebra h = group_algebra(symmetric_group_table(3), Field::prime(2));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_ricos(h));
}
BENCHMARK(BM_EnumerateRicosS3);

void BM_ClosureRegularSweedler(benchmark::State& state)
{
    const ComoduleAlgebra a = regular(sweedler(Field::prime(3)));
    const ClosureOptions opts{{6, static_cast<unsigned>(state.range(0))}, true};
    for (auto _ : state) benchmark::DoNotOptimize(closure_report(a, opts));
}
BENCHMARK(BM_ClosureRegularSweedler)->Arg(1)->Arg(4);

void BM_ClosureCleft(benchmark::State& state)
{
    const Field f = Field::prime(3);
    const ComoduleAlgebra a = trivial_cleft(group_algebra(cyclic_group_table(2), f).algebra(), sweedler(f)).algebra;
    for (auto _ : state) benchmark::DoNotOptimize(closure_report(a, {{}, false}));
}
BENCHMARK(BM_ClosureCleft);

void BM_CanonicalMapCleft(benchmark::State& state)
{
    const Field f = Field::prime(3);
    const ComoduleAlgebra a = trivial_cleft(group_algebra(cyclic_group_table(2), f).algebra(), sweedler(f)).algebra;
    const GeneralisedQuotient q = full_quotient(a.hopf());
    for (auto _ : state) benchmark::DoNotOptimize(canonical_map(a, q));
}
BENCHMARK(BM_CanonicalMapCleft);

}  // namespace
BENCHMARK_MAIN();
