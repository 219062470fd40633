// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "rcb/blocks.hpp"
#include "rcb/verify.hpp"

namespace {

rcb::ParamSpec bench_params(int m) {
    auto f = rcb::make_cyclotomic_field(m);
    std::vector<rcb::Cyclotomic> c;
    for (int l = 1; l < m; ++l) c.push_back(rcb::Cyclotomic::zeta_power(f, l) + rcb::Cyclotomic(f, rcb::Rational(l)));
    return rcb::ParamSpec::numeric(m, rcb::Cyclotomic(f, rcb::Rational(1)), c);
}

void BM_invariants_serial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto params = bench_params(m);
    const auto lambdas = rcb::enumerate_multipartitions(m, n);
    for (auto _ : state) benchmark::DoNotOptimize(rcb::compute_invariants_serial(lambdas, params));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(lambdas.size()));
}

void BM_invariants_parallel(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int n = static_cast<int>(state.range(1));
    const auto params = bench_params(m);
    const auto lambdas = rcb::enumerate_multipartitions(m, n);
    for (auto _ : state) benchmark::DoNotOptimize(rcb::compute_invariants_parallel(lambdas, params));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(lambdas.size()));
}

void BM_suite(benchmark::State& state, bool parallel) {
    rcb::SuiteOptions opts;
    opts.parallel = parallel;
    const char* names[] = {"gamma", "central", "plemmas"};
    const char* name = names[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(rcb::run_suite(name, 2, 3, opts));
    state.SetLabel(name);
}

void BM_suite_serial(benchmark::State& state) { BM_suite(state, false); }
void BM_suite_parallel(benchmark::State& state) { BM_suite(state, true); }

}  // namespace

BENCHMARK(BM_invariants_serial)->Args({2, 8})->Args({3, 7})->Args({4, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_invariants_parallel)->Args({2, 8})->Args({3, 7})->Args({4, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite_parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
