#include <benchmark/benchmark.h>

#include "ivpoly/construct.hpp"

using namespace ivpoly;

namespace {

ZPoly dense_root_poly(int degree) {
    std::vector<Int> roots;
    for (int i = 0; i < degree; ++i) roots.push_back(Int(30029) * i + 17);
    return ZPoly::from_roots(roots);
}

void BM_FixedDivisor(benchmark::State& state) {
    ZPoly g = dense_root_poly(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fixed_divisor(g));
}
BENCHMARK(BM_FixedDivisor)->Arg(8)->Arg(16)->Arg(24);

void BM_CrtSolve(benchmark::State& state) {
    std::vector<Congruence> cs = {{1, 5},  {2, 7},   {3, 11},  {4, 13}, {5, 17},
                                  {6, 19}, {7, 23},  {8, 29},  {9, 31}, {10, 37}};
    for (auto _ : state) benchmark::DoNotOptimize(crt_solve(cs));
}
BENCHMARK(BM_CrtSolve);

void BM_BuildDesign(benchmark::State& state) {
    LengthSpec spec({1, 1, 2});
    DesignParams params = choose_parameters(spec);
    for (auto _ : state) benchmark::DoNotOptimize(build_design(spec, params));
}
BENCHMARK(BM_BuildDesign);

void BM_ConstructPrescribed22(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(construct_prescribed(LengthSpec({1, 1})));
}
BENCHMARK(BM_ConstructPrescribed22);

void BM_VerifyPrescribed22(benchmark::State& state) {
    PrescribedLengthsArtifact art = construct_prescribed(LengthSpec({1, 1}));
    for (auto _ : state) benchmark::DoNotOptimize(verify_prescribed(art));
}
BENCHMARK(BM_VerifyPrescribed22);

void BM_ConstructTransfer(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(construct_transfer(n));
}
BENCHMARK(BM_ConstructTransfer)->Arg(1)->Arg(2);

void BM_BruteforceEnumeration(benchmark::State& state) {
    PrescribedLengthsArtifact art = construct_prescribed(LengthSpec({1, 2}));
    FactoredInput input{art.lift->lifted, art.design->params.c, {{art.design->params.p, 1}}};
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_factorizations_bruteforce(input));
}
BENCHMARK(BM_BruteforceEnumeration);

}  // namespace

BENCHMARK_MAIN();
