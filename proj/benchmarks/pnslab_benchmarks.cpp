#include "pnslab/pnslab.hpp"

#include <benchmark/benchmark.h>

using namespace pnslab;

namespace {

FiniteRing matrix_ring(std::uint64_t p) { return build_ring(RingDescriptor::matrix(2, RingDescriptor::zn(p))); }

void BM_MatrixMultiply(benchmark::State& state) {
    auto R = matrix_ring(static_cast<std::uint64_t>(state.range(0)));
    std::uint32_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(R.mul(R.at(i % R.order()), R.at((i * 7 + 3) % R.order())));
        ++i;
    }
}
BENCHMARK(BM_MatrixMultiply)->Arg(2)->Arg(3)->Arg(8);

void BM_JacobsonRadical(benchmark::State& state) {
    auto R = matrix_ring(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        RingAnalysis A(R);
        benchmark::DoNotOptimize(A.subset(SubsetKind::JacobsonRadical).size());
    }
}
BENCHMARK(BM_JacobsonRadical)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PnsOracleAllElements(benchmark::State& state) {
    auto R = matrix_ring(3);
    for (auto _ : state) {
        RingAnalysis A(R);
        std::uint32_t present = 0;
        for (Element a : R.elements()) present += pns_oracle(A, a, 2).has_value();
        benchmark::DoNotOptimize(present);
    }
}
BENCHMARK(BM_PnsOracleAllElements)->Unit(benchmark::kMillisecond);

void BM_PnsFormulaAllElements(benchmark::State& state) {
    auto R = matrix_ring(3);
    for (auto _ : state) {
        RingAnalysis A(R);
        std::uint32_t present = 0;
        for (Element a : R.elements()) present += pns_formula(A, a, 2).has_value();
        benchmark::DoNotOptimize(present);
    }
}
BENCHMARK(BM_PnsFormulaAllElements)->Unit(benchmark::kMillisecond);

void BM_TransferSweep(benchmark::State& state) {
    auto R = matrix_ring(2);
    SweepOptions opt;
    opt.n_min = 1;
    opt.n_max = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        RingLab lab(R);
        benchmark::DoNotOptimize(sweep_transfers(lab, opt)[1].violations);
    }
}
BENCHMARK(BM_TransferSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
