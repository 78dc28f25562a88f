// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "chroma/defs.hpp"

using namespace chroma;

static void BM_ParseStandard(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_expr("JungleGreen!50!DarkOrchid!25!white"));
}
BENCHMARK(BM_ParseStandard);

static void BM_ParseExtended(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_expr("rgb,15:red,10.5;green,9;blue,7.5"));
}
BENCHMARK(BM_ParseExtended);

static void BM_Evaluate(benchmark::State& state) {
    EvalContext ctx = make_standard_context();
    ColorExpr e = parse_expr("rgb:red!50,4;green!25,2");
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(e, ctx));
}
BENCHMARK(BM_Evaluate);

static void BM_ConvertHsb(benchmark::State& state) {
    ColorValue c = ColorValue::rgb(0.7, 0.6, 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(convert(c, Model::hsb));
}
BENCHMARK(BM_ConvertHsb);

static void BM_ResolveNamed(benchmark::State& state) {
    ColorDatabase db = ColorDatabase::with_builtin_tables();
    for (auto _ : state) benchmark::DoNotOptimize(db.resolve("JungleGreen"));
}
BENCHMARK(BM_ResolveNamed);

BENCHMARK_MAIN();
