#include "lexfact/verify.hpp"

#include <algorithm>
#include <limits>

#include "lexfact/consumers.hpp"

namespace lexfact::verify {

namespace {

constexpr std::size_t kMaxRecorded = 20;

std::string show(std::span<const Natural> a) {
    return "(" + to_string(a) + ")";
}

// Rightmost nonzero index over all of a, or a.size().
std::size_t rightmost_nonzero(std::span<const Natural> a) {
    for (std::size_t j = a.size(); j-- > 0;) {
        if (a[j] != 0) return j;
    }
    return a.size();
}

void check_state(const Instance& instance, const WorkerState& state, Report& report) {
    const Candidate& a = state.previous;
    const Natural n = instance.element();
    const auto gens = instance.generators();
    const Natural value = phi(instance, a);

    if (state.was_valid != (value == n)) {
        report.fail("wasValid disagrees with phi at " + show(a));
    }
    if (lex_less(a, state.bound)) {
        report.fail("candidate " + show(a) + " below its bound " + show(state.bound));
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > n / gens[i] + 1) {
            report.fail("coordinate " + std::to_string(i) + " exceeds floor(n/g)+1 at " + show(a));
        }
    }
    if (value < n) {
        report.fail("undershoot: phi < n at " + show(a));
        return;
    }
    const std::size_t k = rightmost_nonzero(a);
    if (k == a.size()) {
        if (value != n) report.fail("zero candidate with nonzero element");
    } else if (value - n >= gens[k]) {
        report.fail("overshoot not below g_k at " + show(a));
    }
}

}  // namespace

void Report::fail(std::string message) {
    if (violations.size() < kMaxRecorded) violations.push_back(std::move(message));
}

namespace {

template <typename PerIndex>
std::uint64_t saturating_product(const Instance& instance, PerIndex factor) {
    std::uint64_t product = 1;
    for (Natural g : instance.generators()) {
        if (__builtin_mul_overflow(product, factor(instance.element(), g), &product)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return product;
}

}  // namespace

std::uint64_t floor_product(const Instance& instance) {
    return saturating_product(instance, [](Natural n, Natural g) { return n / g + 1; });
}

std::uint64_t coordinate_box_size(const Instance& instance) {
    return saturating_product(instance, [](Natural n, Natural g) { return n / g + (n % g != 0) + 1; });
}

Report check_stream(const Instance& instance, const StreamConfig& config, const std::set<Candidate>* oracle) {
    Report report;
    const std::uint64_t residuals_before = nonpositive_residual_count();
    const std::uint64_t budget = coordinate_box_size(instance);
    const std::size_t d = instance.dimension();
    const bool skipping = d >= 2 && modulo_enabled(config, d);

    // Largest oracle factorization not yet matched, walking downwards.
    std::set<Candidate>::const_reverse_iterator expected;
    if (oracle) expected = oracle->rbegin();

    auto account = [&](const WorkerState& state) {
        const Candidate& c = state.previous;
        if (state.was_valid && !report.emitted.insert(c).second) {
            report.fail("factorization emitted twice: " + show(c));
        }
        if (!oracle) return;
        if (expected != oracle->rend() && lex_less(c, *expected)) {
            report.fail("factorization " + show(*expected) + " skipped before candidate " + show(c));
            while (expected != oracle->rend() && lex_less(c, *expected)) ++expected;
        }
        if (expected != oracle->rend() && c == *expected) {
            if (!state.was_valid) report.fail("oracle factorization " + show(c) + " not marked valid");
            ++expected;
        } else if (state.was_valid) {
            report.fail("emitted " + show(c) + " is not in the oracle set");
        }
    };

    WorkerState state = first_state(instance);
    while (!state.end_of_stream) {
        ++report.candidates;
        check_state(instance, state, report);
        account(state);
        if (report.steps >= budget) {
            report.fail("stream exceeded " + std::to_string(budget) + " steps without ending");
            break;
        }

        const Candidate before = state.previous;
        const bool predict_skip = skipping && state.was_valid && rightmost_nonzero(std::span(before).first(d - 1)) == d - 2 &&
                                  before[d - 2] >= instance.modulo_step();
        next_candidate(state, config);
        ++report.steps;
        if (state.end_of_stream) break;
        if (!lex_less(state.previous, before)) {
            report.fail("no strict descent from " + show(before) + " to " + show(state.previous));
            break;
        }
        if (predict_skip && !state.was_valid) {
            report.fail("modulo skip from " + show(before) + " produced invalid " + show(state.previous));
        }
    }

    if (oracle) {
        if (expected != oracle->rend()) report.fail("stream ended before factorization " + show(*expected));
        if (report.emitted != *oracle) report.fail("emitted set differs from the oracle");
    }
    if (nonpositive_residual_count() != residuals_before) {
        report.fail("solver saw a residual <= 0 from a stream state");
    }
    return report;
}

Report check_pool(const Instance& instance, const PoolConfig& config, const std::set<Candidate>* oracle) {
    Report report;
    const std::uint64_t residuals_before = nonpositive_residual_count();
    const Natural n = instance.element();
    std::vector<Candidate> sorted_oracle;
    if (oracle) sorted_oracle.assign(oracle->begin(), oracle->end());

    PoolHooks hooks;
    hooks.on_split = [&](const SplitEvent& event) {
        if (!lex_less(event.donor_old_bound, event.cut) || !lex_less(event.cut, event.donor_previous)) {
            report.fail("accepted split " + show(event.cut) + " outside (" + show(event.donor_old_bound) + ", " +
                        show(event.donor_previous) + ")");
        }
    };
    hooks.on_emit = [&](std::size_t, std::span<const Natural> f) {
        Candidate c(f.begin(), f.end());
        if (phi(instance, c) != n) report.fail("emitted non-factorization " + show(c));
        if (oracle && !oracle->count(c)) report.fail("emitted " + show(c) + " is not in the oracle set");
        if (!report.emitted.insert(std::move(c)).second) report.fail("factorization emitted twice: " + show(f));
    };
    hooks.on_barrier = [&](const WorkPool& pool) {
        ++report.barriers;
        std::vector<const WorkerState*> running;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const WorkerState& s = pool.slot(i).state;
            if (!s.end_of_stream) running.push_back(&s);
        }
        std::sort(running.begin(), running.end(),
                  [](const WorkerState* x, const WorkerState* y) { return lex_less(y->previous, x->previous); });
        for (std::size_t k = 0; k + 1 < running.size(); ++k) {
            if (!lex_less_equal(running[k + 1]->previous, running[k]->bound)) {
                report.fail("slices overlap: (" + show(running[k]->bound) + ", " + show(running[k]->previous) +
                            "] and (" + show(running[k + 1]->bound) + ", " + show(running[k + 1]->previous) + "]");
            }
        }
        if (!oracle) return;
        // Exact coverage: nothing emitted sits inside a running slice, and the
        // emitted set plus the oracle points inside the slices add up to the oracle.
        std::size_t covered = report.emitted.size();
        for (const WorkerState* s : running) {
            const auto lo = std::upper_bound(sorted_oracle.begin(), sorted_oracle.end(), s->bound);
            const auto hi = std::lower_bound(sorted_oracle.begin(), sorted_oracle.end(), s->previous);
            if (lo < hi) covered += static_cast<std::size_t>(hi - lo);
            const auto inside = report.emitted.upper_bound(s->bound);
            if (inside != report.emitted.end() && lex_less(*inside, s->previous)) {
                report.fail("barrier " + std::to_string(report.barriers) + ": emitted " + show(*inside) +
                            " still inside slice (" + show(s->bound) + ", " + show(s->previous) + ")");
            }
        }
        if (covered != oracle->size()) {
            report.fail("barrier " + std::to_string(report.barriers) + ": covers " + std::to_string(covered) + " of " +
                        std::to_string(oracle->size()) + " factorizations");
        }
    };

    CountingConsumer sink;
    const PoolStats stats = run_pool(instance, config, sink, &hooks);
    report.candidates = stats.candidates;
    report.splits = stats.splits;

    if (sink.finalize() != report.emitted.size()) report.fail("consumer count differs from distinct emissions");
    if (oracle && report.emitted != *oracle) report.fail("pool result differs from the oracle");
    if (nonpositive_residual_count() != residuals_before) {
        report.fail("solver saw a residual <= 0 during the pool run");
    }
    return report;
}

}  // namespace lexfact::verify
