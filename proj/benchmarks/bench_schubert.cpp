#include <benchmark/benchmark.h>

#include "lincount/cohomology.hpp"
#include "lincount/counts.hpp"
#include "lincount/cps.hpp"
#include "lincount/tableaux.hpp"

using namespace lincount;

namespace {

void BM_LrMultiply(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    BoxShape box(3, m);
    CohomologyClass a = sigma1r_power_table(4, box);
    CohomologyClass b = CohomologyClass::schubert(box, Partition{2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(lr_multiply(a, b));
}
BENCHMARK(BM_LrMultiply)->Arg(4)->Arg(6)->Arg(8);

void BM_SigmaPowerTable(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    BoxShape box(3, g);
    for (auto _ : state) benchmark::DoNotOptimize(sigma1r_power_table(g, box));
}
BENCHMARK(BM_SigmaPowerTable)->Arg(4)->Arg(8)->Arg(12);

void BM_TevelevIntegral(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    CountProblem p = classify(g, 1, g + 1);
    for (auto _ : state) benchmark::DoNotOptimize(tevelev_integral(p).value);
}
BENCHMARK(BM_TevelevIntegral)->Arg(6)->Arg(10)->Arg(14);

void BM_CountFillings(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_fillings(g, 2, g + 4));
}
BENCHMARK(BM_CountFillings)->Arg(4)->Arg(6)->Arg(8);

void BM_CpsDegree(benchmark::State& state) {
    int g = static_cast<int>(state.range(0));
    CpsProblem p = make_cps(g, g + 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(cps_degree(p));
}
BENCHMARK(BM_CpsDegree)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
