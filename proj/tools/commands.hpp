#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexfact/consumers.hpp"
#include "lexfact/instance.hpp"
#include "lexfact/partition.hpp"

namespace lexfact::cli {

enum ExitCode : int {
    kSuccess = 0,
    kMismatch = 1,
    kUsageOrIo = 2,
};

struct RunOptions {
    std::vector<Natural> generators;
    Natural element = 0;
    PoolConfig pool;
    bool sort = false;
    std::string output = "-";
    OutputFormat format = OutputFormat::text;
};

/// Prints "count=<k> seconds=<t>".
int command_count(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Writes every factorization to options.output ("-" for `out`).
int command_list(const RunOptions& options, std::ostream& out, std::ostream& err);

struct Scenario {
    std::vector<Natural> generators;
    Natural element = 0;
    std::uint64_t expected = 0;
    std::size_t line = 0;
};

class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lines "g1,g2,...;n;expectedCount"; '#' starts a comment. Errors carry the line number.
std::vector<Scenario> parse_scenarios(std::istream& in);

int command_bench(std::istream& scenarios, const PoolConfig& pool, std::ostream& out, std::ostream& err);
int command_bench(const std::string& path, const PoolConfig& pool, std::ostream& out, std::ostream& err);

struct SelftestLimits {
    std::size_t instances = 100;
    std::uint64_t seed = 20240917;
    std::size_t max_dimension = 5;
    Natural max_generator = 50;
    Natural max_element = 2000;
    /// Instances whose oracle needs more work than this are redrawn.
    std::uint64_t oracle_ceiling = 50'000;
};

/// Deterministic for a given seed. Duplicated generators are drawn on purpose.
std::vector<Instance> random_instances(const SelftestLimits& limits);

int command_selftest(const SelftestLimits& limits, std::ostream& out, std::ostream& err);

}  // namespace lexfact::cli
