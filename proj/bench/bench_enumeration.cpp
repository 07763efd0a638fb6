#include <benchmark/benchmark.h>

#include <omp.h>

#include "turan/oracle.hpp"

using namespace turan;

namespace {

const char* const kFamilies[] = {"clique:3", "clique:4,matching:4", "clique:3,starforest:3x2"};

void BM_Serial(benchmark::State& state) {
    const auto f = ForbiddenFamily::parse(kFamilies[state.range(0)]);
    const auto n = static_cast<std::size_t>(state.range(1));
    std::size_t classes = 0;
    for (auto _ : state) {
        const auto out = enumerate_free_classes_serial(n, f);
        classes = out.size();
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["classes"] = static_cast<double>(classes);
    state.SetLabel(kFamilies[state.range(0)]);
}

void BM_Parallel(benchmark::State& state) {
    const auto f = ForbiddenFamily::parse(kFamilies[state.range(0)]);
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto jobs = static_cast<std::size_t>(state.range(2));
    std::size_t classes = 0;
    for (auto _ : state) {
        const auto out = enumerate_free_classes(n, f, {.jobs = jobs});
        classes = out.size();
        benchmark::DoNotOptimize(out.data());
    }
    state.counters["classes"] = static_cast<double>(classes);
    state.counters["jobs"] = static_cast<double>(jobs);
    state.SetLabel(kFamilies[state.range(0)]);
}

void serial_args(benchmark::internal::Benchmark* b) {
    b->ArgNames({"family", "n"});
    b->Args({0, 9})->Args({0, 10})->Args({1, 8})->Args({2, 9});
}

void parallel_args(benchmark::internal::Benchmark* b) {
    b->ArgNames({"family", "n", "jobs"});
    const int max_jobs = omp_get_max_threads();
    for (auto [family, n] : {std::pair{0, 9}, {0, 10}, {1, 8}, {2, 9}}) {
        for (int jobs = 1; jobs <= max_jobs; jobs *= 2) b->Args({family, n, jobs});
        if (max_jobs & (max_jobs - 1)) b->Args({family, n, max_jobs});
    }
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(serial_args)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Parallel)->Apply(parallel_args)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
