// Microbenchmarks for the fiber-averaged character-sum kernel: residue-field
// table construction, one-place sums at several degrees, and whole levels.

#include <benchmark/benchmark.h>

#include <cmath>

#include "kappau/nagao.hpp"

using namespace kappau;

namespace {

const Family& family3() {
    static const Family fam = make_family(Fq::make(3, 1), 1, 1);
    return fam;
}

const Family& family5() {
    static const Family fam = make_family(Fq::make(5, 1), 1, 1);
    return fam;
}

// First monic irreducible of the requested degree.
FqPoly first_place(const Family& fam, unsigned deg) {
    return monic_irreducibles(fam.O.R, deg).front();
}

void BM_TableBuild(benchmark::State& state) {
    const auto m = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto F = Fq::make(3, m);
        benchmark::DoNotOptimize(F);
    }
}

void BM_PlaceSum3(benchmark::State& state) {
    const auto deg = static_cast<unsigned>(state.range(0));
    const Family& fam = family3();
    const FqPoly pi = first_place(fam, deg);
    long long acc = 0;
    for (auto _ : state) acc += nagao_place_sum(fam, pi);
    benchmark::DoNotOptimize(acc);
    // One fiber per element of the residue field.
    state.counters["fibers"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * std::pow(3.0, deg),
        benchmark::Counter::kIsRate);
}

void BM_PlaceSum5(benchmark::State& state) {
    const auto deg = static_cast<unsigned>(state.range(0));
    const Family& fam = family5();
    const FqPoly pi = first_place(fam, deg);
    long long acc = 0;
    for (auto _ : state) acc += nagao_place_sum(fam, pi);
    benchmark::DoNotOptimize(acc);
    state.counters["fibers"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * std::pow(5.0, deg),
        benchmark::Counter::kIsRate);
}

void BM_Level3(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const Family& fam = family3();
    long long acc = 0;
    for (auto _ : state) acc += nagao_left(fam, n, 1);
    benchmark::DoNotOptimize(acc);
}

void BM_Level5(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const Family& fam = family5();
    long long acc = 0;
    for (auto _ : state) acc += nagao_left(fam, n, 1);
    benchmark::DoNotOptimize(acc);
}

}  // namespace

BENCHMARK(BM_TableBuild)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlaceSum3)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_PlaceSum5)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Level3)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Level5)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
