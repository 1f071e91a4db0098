#include <benchmark/benchmark.h>

#include "lexfact/partition.hpp"

using namespace lexfact;

namespace {

const Instance& table_instance(std::int64_t dimension) {
    static const std::vector<Instance> instances{
        Instance(45000, {13, 37, 38}),
        Instance(5000, {13, 37, 38, 40}),
        Instance(3000, {13, 37, 38, 40, 41}),
        Instance(1500, {13, 37, 38, 40, 41, 42}),
        Instance(1000, {13, 37, 38, 40, 41, 42, 43}),
    };
    return instances.at(static_cast<std::size_t>(dimension - 3));
}

}  // namespace

static void BM_NextCandidate(benchmark::State& state) {
    const Instance& inst = table_instance(state.range(0));
    const StreamConfig config{state.range(1) ? ModuloMode::on : ModuloMode::off};
    WorkerState stream = first_state(inst);
    std::int64_t steps = 0;
    for (auto _ : state) {
        next_candidate(stream, config);
        if (stream.end_of_stream) stream = first_state(inst);
        ++steps;
    }
    state.SetItemsProcessed(steps);
}
BENCHMARK(BM_NextCandidate)->ArgsProduct({{3, 4, 5, 6, 7}, {0, 1}});

static void BM_Sequential(benchmark::State& state) {
    const Instance& inst = table_instance(state.range(0));
    for (auto _ : state) {
        CountingConsumer counter;
        run_sequential(inst, {}, counter);
        benchmark::DoNotOptimize(counter.finalize());
    }
}
BENCHMARK(BM_Sequential)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_Pool(benchmark::State& state) {
    const Instance& inst = table_instance(4);
    PoolConfig config;
    config.workers = static_cast<std::size_t>(state.range(0));
    config.steps_between_splits = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        CountingConsumer counter;
        const auto stats = run_pool(inst, config, counter);
        state.counters["splits"] = static_cast<double>(stats.splits);
        state.counters["phases"] = static_cast<double>(stats.phases);
        benchmark::DoNotOptimize(counter.finalize());
    }
}
BENCHMARK(BM_Pool)->ArgsProduct({{1, 2, 4, 8}, {64, 1024}})->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_SplitWork(benchmark::State& state) {
    const Instance& inst = table_instance(5);
    WorkerState donor = first_state(inst);
    for (int k = 0; k < 1000; ++k) next_candidate(donor);
    for (auto _ : state) {
        benchmark::DoNotOptimize(split_work(donor));
    }
}
BENCHMARK(BM_SplitWork);

BENCHMARK_MAIN();
