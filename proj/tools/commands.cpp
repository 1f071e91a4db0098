#include "commands.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string_view>

namespace lexfact::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double seconds) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(3) << seconds;
    return out.str();
}

std::string join(const std::vector<Natural>& values, char separator) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += separator;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<Natural> parse_natural(std::string_view text) {
    text = trim(text);
    Natural value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
    return value;
}

// Builds the instance and validates the pool, reporting usage errors to err.
std::optional<Instance> prepare(const RunOptions& options, std::ostream& err) {
    try {
        options.pool.validate();
        return Instance(options.element, options.generators);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return std::nullopt;
    }
}

}  // namespace

int command_count(const RunOptions& options, std::ostream& out, std::ostream& err) {
    const auto instance = prepare(options, err);
    if (!instance) return kUsageOrIo;

    CountingConsumer counter;
    const auto start = Clock::now();
    run_pool(*instance, options.pool, counter);
    const double elapsed = seconds_since(start);
    out << "count=" << counter.finalize() << " seconds=" << format_seconds(elapsed) << '\n';
    return kSuccess;
}

int command_list(const RunOptions& options, std::ostream& out, std::ostream& err) {
    const auto instance = prepare(options, err);
    if (!instance) return kUsageOrIo;

    std::ofstream file;
    if (options.output != "-") {
        file.open(options.output, std::ios::out | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file '" << options.output << "'\n";
            return kUsageOrIo;
        }
    }
    std::ostream& sink = options.output == "-" ? out : file;

    try {
        WritingConsumer writer(sink, options.format, instance->dimension());
        if (options.sort) {
            CollectingConsumer collector;
            run_pool(*instance, options.pool, collector);
            for (const Candidate& f : collector.finalize(true)) writer.accept(f);
        } else {
            run_pool(*instance, options.pool, writer);
        }
        writer.finalize();
    } catch (const SinkError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }
    return kSuccess;
}

std::vector<Scenario> parse_scenarios(std::istream& in) {
    std::vector<Scenario> scenarios;
    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        auto bad = [&](const std::string& why) {
            return ScenarioError("line " + std::to_string(line_number) + ": " + why + ": '" + std::string(line) + "'");
        };

        const auto first = line.find(';');
        const auto second = first == std::string_view::npos ? first : line.find(';', first + 1);
        if (second == std::string_view::npos || line.find(';', second + 1) != std::string_view::npos) {
            throw bad("expected 'g1,g2,...;n;expectedCount'");
        }

        Scenario scenario;
        scenario.line = line_number;
        std::string_view gens = line.substr(0, first);
        while (true) {
            const auto comma = gens.find(',');
            const auto g = parse_natural(gens.substr(0, comma));
            if (!g || *g == 0) throw bad("generators must be positive integers");
            scenario.generators.push_back(*g);
            if (comma == std::string_view::npos) break;
            gens.remove_prefix(comma + 1);
        }
        const auto n = parse_natural(line.substr(first + 1, second - first - 1));
        const auto expected = parse_natural(line.substr(second + 1));
        if (!n) throw bad("element is not a nonnegative integer");
        if (!expected) throw bad("expected count is not a nonnegative integer");
        scenario.element = *n;
        scenario.expected = *expected;
        try {
            Instance check(scenario.element, scenario.generators);
        } catch (const std::invalid_argument& e) {
            throw bad(e.what());
        }
        scenarios.push_back(std::move(scenario));
    }
    return scenarios;
}

int command_bench(std::istream& input, const PoolConfig& pool, std::ostream& out, std::ostream& err) {
    std::vector<Scenario> scenarios;
    try {
        pool.validate();
        scenarios = parse_scenarios(input);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageOrIo;
    }

    out << std::left << std::setw(26) << "generators" << std::right << std::setw(10) << "n" << std::setw(12)
        << "expected" << std::setw(12) << "got" << std::setw(10) << "seconds" << "  result\n";

    std::size_t passed = 0;
    for (const Scenario& scenario : scenarios) {
        const Instance instance(scenario.element, scenario.generators);
        CountingConsumer counter;
        const auto start = Clock::now();
        run_pool(instance, pool, counter);
        const double elapsed = seconds_since(start);
        const bool ok = counter.finalize() == scenario.expected;
        passed += ok ? 1 : 0;
        out << std::left << std::setw(26) << join(scenario.generators, ',') << std::right << std::setw(10)
            << scenario.element << std::setw(12) << scenario.expected << std::setw(12) << counter.finalize()
            << std::setw(10) << format_seconds(elapsed) << "  " << (ok ? "pass" : "FAIL") << '\n';
        out.flush();
    }
    out << passed << '/' << scenarios.size() << " scenarios passed\n";
    return passed == scenarios.size() ? kSuccess : kMismatch;
}

int command_bench(const std::string& path, const PoolConfig& pool, std::ostream& out, std::ostream& err) {
    std::ifstream file(path);
    if (!file) {
        err << "error: cannot open scenario file '" << path << "'\n";
        return kUsageOrIo;
    }
    return command_bench(file, pool, out, err);
}

}  // namespace lexfact::cli
