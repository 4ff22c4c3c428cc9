#include <benchmark/benchmark.h>

#include "ternary/codes.hpp"
#include "ternary/distance.hpp"
#include "ternary/factor.hpp"

using namespace ternary;

namespace {

void BM_field_mul(benchmark::State& state) {
    FieldCtx ctx = ctx_default(static_cast<unsigned>(state.range(0)));
    FieldElem a = ctx.element_from_index(ctx.n() / 3);
    FieldElem b = ctx.element_from_index(ctx.n() / 7 + 1);
    for (auto _ : state) {
        a = ctx.mul(a, b);
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_field_mul)->Arg(4)->Arg(8)->Arg(13)->Arg(20)->Arg(40);

void BM_field_pow(benchmark::State& state) {
    FieldCtx ctx = ctx_default(static_cast<unsigned>(state.range(0)));
    FieldElem a = ctx.element_from_index(ctx.n() / 3);
    u64 e = ctx.n() / 2 + 1;
    for (auto _ : state) benchmark::DoNotOptimize(ctx.pow(a, e));
}
BENCHMARK(BM_field_pow)->Arg(8)->Arg(13)->Arg(40);

void BM_factor_deg17(benchmark::State& state) {
    TritPoly f = TritPoly::parse(
        "x^17-x^16+x^15+x^14+x^11+x^10-x^9+x^8-x^7-x^6-x^3-x^2+x-1");
    for (auto _ : state) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(BM_factor_deg17);

void BM_minimal_poly(benchmark::State& state) {
    FieldCtx ctx = ctx_default(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(minimal_poly(ctx, 1));
}
BENCHMARK(BM_minimal_poly)->Arg(8)->Arg(13);

void BM_build_code(benchmark::State& state) {
    FieldCtx ctx = ctx_default(8);
    for (auto _ : state) benchmark::DoNotOptimize(build_code(ctx, {0, 1, 3362}));
}
BENCHMARK(BM_build_code);

void BM_weight3_oracle(benchmark::State& state) {
    FieldCtx ctx = ctx_default(static_cast<unsigned>(state.range(0)));
    u64 e = 2 * pow3(static_cast<unsigned>(state.range(0)) - 1) -
            pow3(static_cast<unsigned>(state.range(0)) / 2 - 1) - 1;
    CyclicCode code = build_code(ctx, {0, 1, e});
    for (auto _ : state) benchmark::DoNotOptimize(find_weight_witness(code, 3));
}
BENCHMARK(BM_weight3_oracle)->Arg(6)->Arg(8);

void BM_reduced_c01e(benchmark::State& state) {
    FieldCtx ctx = ctx_default(static_cast<unsigned>(state.range(0)));
    u64 e = 2 * pow3(static_cast<unsigned>(state.range(0)) - 1) -
            pow3(static_cast<unsigned>(state.range(0)) / 2 - 1) - 1;
    for (auto _ : state) benchmark::DoNotOptimize(weight3_reduced_c01e(ctx, e));
}
BENCHMARK(BM_reduced_c01e)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
