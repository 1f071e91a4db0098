// Randomized property checks over small instances, with the brute-force
// oracle as ground truth.
#include <gtest/gtest.h>

#include <random>

#include "lexfact/oracle.hpp"
#include "lexfact/partition.hpp"
#include "lexfact/verify.hpp"

using namespace lexfact;

namespace {

std::vector<Instance> generate(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    std::uniform_int_distribution<Natural> gen(1, 30);
    std::uniform_int_distribution<Natural> elem(0, 400);
    std::bernoulli_distribution repeat(0.25);
    std::vector<Instance> out;
    while (out.size() < count) {
        std::vector<Natural> g(dim(rng));
        for (std::size_t i = 0; i < g.size(); ++i) {
            g[i] = (i > 0 && repeat(rng)) ? g[i - 1] : gen(rng);
        }
        Instance inst(elem(rng), g);
        try {
            oracle::brute_force(inst, 20'000);
        } catch (const oracle::OracleTooLarge&) {
            continue;
        }
        out.push_back(std::move(inst));
    }
    return out;
}

std::string first_violation(const verify::Report& r) {
    return r.ok() ? std::string() : r.violations.front();
}

}  // namespace

TEST(Properties, StreamInvariantsAgainstOracle) {
    for (const Instance& inst : generate(11, 150)) {
        const auto truth = oracle::brute_force(inst).factorizations;
        for (ModuloMode mode : {ModuloMode::on, ModuloMode::off, ModuloMode::automatic}) {
            const auto report = verify::check_stream(inst, {mode}, &truth);
            ASSERT_TRUE(report.ok()) << inst.describe() << ": " << first_violation(report);
            ASSERT_LE(report.steps, verify::coordinate_box_size(inst));
        }
    }
}

TEST(Properties, StepCountCanExceedFloorProduct) {
    // First candidate (1,0) overshoots with a coordinate above floor(n/g_1).
    const Instance inst(32, {37, 40});
    const auto report = verify::check_stream(inst, {});
    ASSERT_TRUE(report.ok()) << first_violation(report);
    EXPECT_EQ(verify::floor_product(inst), 1u);
    EXPECT_EQ(report.steps, 2u);
    EXPECT_EQ(verify::coordinate_box_size(inst), 4u);
}

TEST(Properties, ModuloEquivalenceAndSavings) {
    for (const Instance& inst : generate(12, 100)) {
        CollectingConsumer on;
        CollectingConsumer off;
        const auto with = run_sequential(inst, {ModuloMode::on}, on);
        const auto without = run_sequential(inst, {ModuloMode::off}, off);
        ASSERT_EQ(on.collected(), off.collected()) << inst.describe();
        ASSERT_LE(with.candidates, without.candidates) << inst.describe();
    }
}

TEST(Properties, PoolMatchesOracleForAnyConfiguration) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> workers(1, 12);
    std::uniform_int_distribution<std::size_t> steps(1, 50);
    std::uniform_int_distribution<std::size_t> buffer(1, 20);
    for (const Instance& inst : generate(14, 60)) {
        const auto truth = oracle::brute_force(inst).factorizations;
        PoolConfig config;
        config.workers = workers(rng);
        config.steps_between_splits = steps(rng);
        config.buffer_capacity = buffer(rng);
        const auto report = verify::check_pool(inst, config, &truth);
        ASSERT_TRUE(report.ok()) << inst.describe() << " W=" << config.workers << ": " << first_violation(report);
    }
}

TEST(Properties, SplitCutsStartValidStreams) {
    // Any cut produced from a reachable state keeps the overshoot invariant,
    // so the recipient stream is well formed.
    for (const Instance& inst : generate(15, 80)) {
        if (inst.dimension() < 2) continue;
        WorkerState s = first_state(inst);
        while (!s.end_of_stream) {
            if (const auto cut = split_work(s)) {
                const Natural value = phi(inst, *cut);
                ASSERT_GE(value, inst.element());
                std::size_t k = cut->size();
                while (k > 0 && (*cut)[k - 1] == 0) --k;
                ASSERT_GT(k, 0u);
                ASSERT_LT(value - inst.element(), inst.generator(k - 1)) << inst.describe();
            }
            next_candidate(s);
        }
    }
}
