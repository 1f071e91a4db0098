#include <iostream>
#include <limits>
#include <map>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace lexfact;
using namespace lexfact::cli;

constexpr const char* kGeneratorNote =
    "Generators are used exactly as given: no sorting, deduplication or gcd check. "
    "The first candidate divides by the first listed generator, so the order changes the "
    "stream but never the result set.";

const CLI::Range kPositive(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max(), "POSITIVE");

void add_pool_options(CLI::App& cmd, PoolConfig& pool) {
    static const std::map<std::string, ModuloMode> modes{
        {"auto", ModuloMode::automatic}, {"on", ModuloMode::on}, {"off", ModuloMode::off}};
    cmd.add_option("-w,--workers", pool.workers, "Worker threads (default: hardware parallelism)")
        ->check(kPositive);
    cmd.add_option("--buffer", pool.buffer_capacity, "Factorizations buffered per worker between barriers")
        ->check(kPositive)
        ->capture_default_str();
    cmd.add_option("--steps", pool.steps_between_splits, "Stream steps per worker between work splits")
        ->check(kPositive)
        ->capture_default_str();
    cmd.add_option("--modulo", pool.stream.modulo, "Modulo skip on the penultimate index: auto|on|off")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
        ->default_str("auto");
}

void add_instance_options(CLI::App& cmd, RunOptions& options) {
    cmd.add_option("-g,--gens", options.generators, "Comma-separated positive generators g1,...,gd")
        ->required()
        ->delimiter(',')
        ->check(kPositive);
    cmd.add_option("-n,--n", options.element, "Element n to factor")->required();
    add_pool_options(cmd, options.pool);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate factorization sets Z(n, (g1,...,gd)) with parallel bounded lexicographic streams"};
    app.footer(kGeneratorNote);
    app.require_subcommand(1);

    const std::size_t hardware = std::max(1u, std::thread::hardware_concurrency());

    RunOptions count_options;
    count_options.pool.workers = hardware;
    auto* count = app.add_subcommand("count", "Print |Z(n)| and wall time");
    add_instance_options(*count, count_options);

    RunOptions list_options;
    list_options.pool.workers = hardware;
    auto* list = app.add_subcommand("list", "Write every factorization, one per line");
    add_instance_options(*list, list_options);
    list->add_flag("--sort", list_options.sort, "Descending lexicographic order (canonical, diffable)");
    list->add_option("-o,--output", list_options.output, "Output file, '-' for standard output")
        ->capture_default_str();
    const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"csv", OutputFormat::csv}};
    list->add_option("--format", list_options.format, "text|csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("text");

    PoolConfig bench_pool;
    bench_pool.workers = hardware;
    std::string scenario_path = LEXFACT_DEFAULT_SCENARIOS;
    auto* bench = app.add_subcommand("bench", "Run count scenarios 'g1,...;n;expected' and compare");
    bench->add_option("scenarios", scenario_path, "Scenario file")->capture_default_str();
    add_pool_options(*bench, bench_pool);

    SelftestLimits limits;
    auto* selftest = app.add_subcommand("selftest", "Randomized oracle equivalence and invariant checks");
    selftest->add_option("--instances", limits.instances, "Number of random instances")->capture_default_str();
    selftest->add_option("--seed", limits.seed, "Random seed")->capture_default_str();
    selftest->add_option("--max-dim", limits.max_dimension, "Largest dimension d")->capture_default_str();
    selftest->add_option("--max-gen", limits.max_generator, "Largest generator")->capture_default_str();
    selftest->add_option("--max-n", limits.max_element, "Largest element n")->capture_default_str();
    selftest->add_option("--oracle-ceiling", limits.oracle_ceiling, "Redraw instances needing more oracle work")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageOrIo;
    }

    if (*count) return command_count(count_options, std::cout, std::cerr);
    if (*list) return command_list(list_options, std::cout, std::cerr);
    if (*bench) return command_bench(scenario_path, bench_pool, std::cout, std::cerr);
    if (*selftest) return command_selftest(limits, std::cout, std::cerr);
    return kUsageOrIo;
}
