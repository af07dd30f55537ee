#include <benchmark/benchmark.h>

#include "segre/checks.hpp"
#include "segre/integrals.hpp"
#include "segre/series.hpp"

using namespace segre;

static void BM_IntegralSymbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IntegralEngine engine;  // cold engine per iteration
        benchmark::DoNotOptimize(engine.integral(n));
    }
}
BENCHMARK(BM_IntegralSymbolic)->DenseRange(2, 7);

static void BM_IntegralFixedDegree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    OpConfig cfg;
    cfg.d = DPoly(Rational(3));
    for (auto _ : state) {
        IntegralEngine engine(cfg);
        benchmark::DoNotOptimize(engine.integral(n));
    }
}
BENCHMARK(BM_IntegralFixedDegree)->DenseRange(4, 8);

static void BM_PushforwardWidest(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    OpConfig cfg;
    // the widest element along the pipeline is roughly half way down
    Element e = Element::s_class(2 * n, n).normalized(cfg.norm);
    for (int k = 0; k < n / 2; ++k) e = pushf(e, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pushf(e, cfg));
    }
    state.counters["terms"] = static_cast<double>(e.size());
}
BENCHMARK(BM_PushforwardWidest)->DenseRange(4, 8);

static void BM_PushforwardThreads(benchmark::State& state) {
    OpConfig cfg;
    cfg.threads = static_cast<int>(state.range(0));
    const int n = 8;
    Element e = Element::s_class(2 * n, n).normalized(cfg.norm);
    for (int k = 0; k < n / 2; ++k) e = pushf(e, cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pushf(e, cfg));
    }
}
BENCHMARK(BM_PushforwardThreads)->Arg(1)->Arg(2)->Arg(4);

static void BM_MainTheoremChecker(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_main_theorem(k, 6, 5));
    }
}
BENCHMARK(BM_MainTheoremChecker)->DenseRange(1, 3);

static void BM_ClosedFormSeries(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rank_zero_closed_form(Rational(25), Rational(25), Rational(-15), order));
    }
}
BENCHMARK(BM_ClosedFormSeries)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
