#include <array>
#include <iostream>
#include <random>

#include "commands.hpp"
#include "lexfact/oracle.hpp"
#include "lexfact/verify.hpp"

namespace lexfact::cli {

std::vector<Instance> random_instances(const SelftestLimits& limits) {
    std::mt19937_64 rng(limits.seed);
    auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };

    std::vector<Instance> instances;
    instances.reserve(limits.instances);
    while (instances.size() < limits.instances) {
        const std::size_t d = uniform(1, limits.max_dimension);
        std::vector<Natural> gens;
        for (std::size_t i = 0; i < d; ++i) {
            if (i > 0 && uniform(0, 3) == 0) {
                gens.push_back(gens[uniform(0, i - 1)]);
            } else {
                gens.push_back(uniform(1, limits.max_generator));
            }
        }
        Instance instance(uniform(0, limits.max_element), std::move(gens));
        try {
            oracle::brute_force(instance, limits.oracle_ceiling);
        } catch (const oracle::OracleTooLarge&) {
            continue;
        }
        instances.push_back(std::move(instance));
    }
    return instances;
}

namespace {

const char* mode_name(ModuloMode mode) {
    return mode == ModuloMode::on ? "on" : "off";
}

}  // namespace

int command_selftest(const SelftestLimits& limits, std::ostream& out, std::ostream& err) {
    if (limits.max_dimension == 0 || limits.max_generator == 0) {
        err << "error: dimension and generator limits must be positive\n";
        return kUsageOrIo;
    }
    constexpr std::array<std::size_t, 3> kWorkers{1, 4, 16};
    constexpr std::array<std::size_t, 4> kSteps{1, 16, 64, 1024};
    constexpr std::array<std::size_t, 3> kBuffers{1, 7, 1000};
    constexpr std::array<ModuloMode, 2> kModes{ModuloMode::on, ModuloMode::off};

    const auto instances = random_instances(limits);
    std::size_t failures = 0;
    auto report = [&](const Instance& instance, const std::string& what, const verify::Report& r) {
        if (r.ok()) return;
        ++failures;
        err << "FAIL " << instance.describe() << " [" << what << "]\n";
        for (const auto& v : r.violations) err << "  " << v << '\n';
    };

    std::size_t variant = 0;
    for (const Instance& instance : instances) {
        const auto truth = oracle::brute_force(instance, limits.oracle_ceiling);
        for (ModuloMode mode : kModes) {
            const StreamConfig stream{mode};
            report(instance, std::string("stream modulo=") + mode_name(mode),
                   verify::check_stream(instance, stream, &truth.factorizations));

            CollectingConsumer collector;
            run_sequential(instance, stream, collector);
            const auto listed = collector.finalize(false);
            if (std::set<Candidate>(listed.begin(), listed.end()) != truth.factorizations ||
                listed.size() != truth.count) {
                ++failures;
                err << "FAIL " << instance.describe() << " [run_sequential modulo=" << mode_name(mode)
                    << "] differs from oracle\n";
            }

            for (std::size_t workers : kWorkers) {
                PoolConfig pool;
                pool.workers = workers;
                pool.steps_between_splits = kSteps[variant % kSteps.size()];
                pool.buffer_capacity = kBuffers[variant % kBuffers.size()];
                pool.stream = stream;
                ++variant;
                report(instance,
                       "pool W=" + std::to_string(workers) + " steps=" + std::to_string(pool.steps_between_splits) +
                           " buffer=" + std::to_string(pool.buffer_capacity) + " modulo=" + mode_name(mode),
                       verify::check_pool(instance, pool, &truth.factorizations));
            }
        }
    }

    if (failures) {
        err << failures << " check(s) failed (seed " << limits.seed << ")\n";
        return kMismatch;
    }
    out << "ok: " << instances.size() << " instances, W∈{1,4,16}, modulo on/off\n";
    return kSuccess;
}

}  // namespace lexfact::cli
