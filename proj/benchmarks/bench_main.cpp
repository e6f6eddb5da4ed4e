#include <benchmark/benchmark.h>

#include "abacus/calculus.hpp"
#include "abacus/symfun.hpp"
#include "abacus/verify.hpp"

using namespace abacus;

// Cold table each iteration: the full character table of S_n.
static void BM_CharacterTable(benchmark::State& state) {
    const auto shapes = partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        CharacterTable table;
        long long acc = 0;
        for (const auto& lambda : shapes)
            for (const auto& rho : shapes) acc += table.character(lambda, rho);
        benchmark::DoNotOptimize(acc);
    }
    state.counters["entries"] = static_cast<double>(shapes.size() * shapes.size());
}
BENCHMARK(BM_CharacterTable)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_ToSchurBasis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto f = plethysm_pr(schur_p(rectangle(2, n / 4)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(to_schur_basis(f));
}
BENCHMARK(BM_ToSchurBasis)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_LrTableaux(benchmark::State& state) {
    const Partition lambda{6, 5, 4, 3, 2, 1};
    const Partition mu{4, 3, 2, 1};
    const Partition nu{4, 3, 2, 1, 1};
    for (auto _ : state) benchmark::DoNotOptimize(lr_tableaux(lambda, mu, nu));
}
BENCHMARK(BM_LrTableaux);

static void BM_VerifyMainAnalytic(benchmark::State& state) {
    const int ell = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_main(ell, ell / 2, true));
}
BENCHMARK(BM_VerifyMainAnalytic)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

static void BM_BarQuotient(benchmark::State& state) {
    const auto shapes = strict_partitions_of(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (const auto& s : shapes) benchmark::DoNotOptimize(bar_quotient3(s));
}
BENCHMARK(BM_BarQuotient)->Arg(20)->Arg(30);

BENCHMARK_MAIN();
