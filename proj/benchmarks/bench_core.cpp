#include <benchmark/benchmark.h>

#include "waring/identities.hpp"
#include "waring/matrix.hpp"
#include "waring/trace_power.hpp"
#include "waring/trace_subgroup.hpp"
#include "waring/waring_sets.hpp"

using namespace waring;

namespace {

void BM_RingMul(benchmark::State& state) {
    auto R = Ring::parse("Z/3[x]/(x^2+1)");
    u64 a = 5, b = 7;
    for (auto _ : state) {
        a = R->mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_RingMul);

void BM_MatPow16(benchmark::State& state) {
    auto R = Ring::parse("Z/16");
    Matrix A = Matrix::companion(R, 3, 7);
    for (auto _ : state) {
        auto P = A.pow(16);
        benchmark::DoNotOptimize(P.trace());
    }
}
BENCHMARK(BM_MatPow16);

void BM_ClosedForm16(benchmark::State& state) {
    auto R = Ring::parse("Z/16");
    for (auto _ : state) benchmark::DoNotOptimize(trace_power_closed_form(*R, 16, 3, 7));
}
BENCHMARK(BM_ClosedForm16);

void BM_TraceSubgroup(benchmark::State& state) {
    auto R = Ring::parse("Z/16");
    for (auto _ : state) {
        Budget budget(1'000'000'000);
        benchmark::DoNotOptimize(trace_subgroup(R, (unsigned)state.range(0), 2, budget));
    }
}
BENCHMARK(BM_TraceSubgroup)->Arg(9)->Arg(16);

void BM_ConditionSet(benchmark::State& state) {
    auto R = Ring::parse("Z/4[e]/(e^2)");
    for (auto _ : state) {
        Budget budget(1'000'000'000);
        benchmark::DoNotOptimize(build_condition_set(SetKind::S12Star, R, budget));
    }
}
BENCHMARK(BM_ConditionSet);

void BM_ChainCertifyDeg16(benchmark::State& state) {
    std::vector<RingPtr> rings = {Ring::parse("Z/16"), Ring::parse("Z/2[e]/(e^2)")};
    for (auto _ : state) {
        Budget budget(1'000'000'000);
        benchmark::DoNotOptimize(verify_chain(16, rings, budget));
    }
}
BENCHMARK(BM_ChainCertifyDeg16);

}  // namespace

BENCHMARK_MAIN();
