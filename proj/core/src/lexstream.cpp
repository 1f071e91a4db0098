#include "lexfact/lexstream.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace lexfact {

namespace {

std::atomic<std::uint64_t> g_nonpositive_residuals{0};

// Solves a[slot] given that a[slot..] is zero. Returns validity.
bool solve_slot(const Instance& instance, Candidate& a, std::size_t slot) {
    const Natural n = instance.element();
    const Natural reached = phi(instance, a);
    if (reached >= n) {
        // p <= 0; compared before subtracting so the residual never wraps.
        g_nonpositive_residuals.fetch_add(1, std::memory_order_relaxed);
        a[slot] = 0;
        return reached == n;
    }
    const Natural residual = n - reached;
    const Natural g = instance.generators()[slot];
    Natural m = residual / g;
    const bool exact = residual - m * g == 0;
    if (!exact) ++m;
    a[slot] = m;
    return exact;
}

// Rightmost index in [0, d-2] holding a nonzero value, or d when none.
std::size_t rightmost_nonzero_below_last(const Candidate& a) {
    const std::size_t d = a.size();
    for (std::size_t j = d - 1; j-- > 0;) {
        if (a[j] > 0) return j;
    }
    return d;
}

}  // namespace

bool modulo_enabled(const StreamConfig& config, std::size_t dimension) noexcept {
    switch (config.modulo) {
        case ModuloMode::on:
            return true;
        case ModuloMode::off:
            return false;
        case ModuloMode::automatic:
            break;
    }
    return dimension >= 4;
}

WorkerState first_state(const Instance& instance, Candidate bound) {
    const std::size_t d = instance.dimension();
    if (bound.size() != d) {
        throw ContractViolation("first_state: bound length does not match dimension");
    }
    const Natural n = instance.element();
    const Natural g1 = instance.generators()[0];

    WorkerState state;
    state.instance = &instance;
    state.previous.assign(d, 0);
    state.previous[0] = (n + g1 - 1) / g1;
    state.was_valid = state.previous[0] * g1 == n;

    const bool zero_bound = std::all_of(bound.begin(), bound.end(), [](Natural v) { return v == 0; });
    state.bound = std::move(bound);
    state.end_of_stream = lex_less_equal(state.previous, state.bound) && !(n == 0 && zero_bound);
    return state;
}

WorkerState first_state(const Instance& instance) {
    return first_state(instance, Candidate(instance.dimension(), 0));
}

bool decrement_and_solve(const Instance& instance, Candidate& a, std::size_t index) {
    const std::size_t d = instance.dimension();
    if (a.size() != d) {
        throw ContractViolation("decrement_and_solve: candidate length does not match dimension");
    }
    if (index + 1 >= d) {
        throw ContractViolation("decrement_and_solve: index " + std::to_string(index) + " out of range for d=" +
                                std::to_string(d));
    }
    if (a[index] == 0) {
        throw ContractViolation("decrement_and_solve: coordinate " + std::to_string(index) + " is already zero");
    }
    for (std::size_t j = index + 1; j < d; ++j) {
        if (a[j] != 0) {
            throw ContractViolation("decrement_and_solve: coordinates right of the index must be zero");
        }
    }
    --a[index];
    return solve_slot(instance, a, index + 1);
}

Natural modulo_skip_step(const Instance& instance) {
    if (instance.dimension() < 2) {
        throw ContractViolation("modulo_skip_step: needs at least two generators");
    }
    return instance.modulo_step();
}

void next_candidate(WorkerState& state, const StreamConfig& config) {
    if (state.end_of_stream) return;
    const Instance& instance = *state.instance;
    Candidate& a = state.previous;
    const std::size_t d = a.size();

    const std::size_t i = rightmost_nonzero_below_last(a);
    if (i == d) {
        state.end_of_stream = true;
        return;
    }
    a[d - 1] = 0;

    // After a factorization, index d-1 cannot give another one until it has
    // dropped by a multiple of the skip step.
    const Natural step = instance.modulo_step();
    if (i == d - 2 && state.was_valid && a[i] >= step && modulo_enabled(config, d)) {
        a[i] -= step;
    } else {
        --a[i];
    }
    state.was_valid = solve_slot(instance, a, i + 1);

    if (lex_less_equal(a, state.bound)) {
        state.end_of_stream = true;
    }
}

void next_factorization(WorkerState& state, const StreamConfig& config) {
    do {
        next_candidate(state, config);
    } while (!state.was_valid && !state.end_of_stream);
}

std::uint64_t nonpositive_residual_count() noexcept {
    return g_nonpositive_residuals.load(std::memory_order_relaxed);
}

}  // namespace lexfact
