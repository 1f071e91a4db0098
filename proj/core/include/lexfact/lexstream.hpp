#pragma once

#include <cstddef>
#include <cstdint>

#include "lexfact/instance.hpp"

namespace lexfact {

enum class ModuloMode { automatic, on, off };

struct StreamConfig {
    ModuloMode modulo = ModuloMode::automatic;
};

/// automatic resolves to off for d <= 3 and on for d >= 4.
bool modulo_enabled(const StreamConfig& config, std::size_t dimension) noexcept;

/**
 * Bounded lexicographic candidate stream.
 *
 * The stream walks candidates in strictly decreasing lexicographic order and
 * stops once a candidate would be <=lex `bound`. The record is self-contained:
 * the next value depends on nothing else.
 *
 * Emission contract: after any step the candidate is a factorization to report
 * iff `was_valid && !end_of_stream` (see emits()).
 */
struct WorkerState {
    const Instance* instance = nullptr;
    Candidate previous;
    Candidate bound;
    bool was_valid = false;
    bool end_of_stream = true;
};

inline bool emits(const WorkerState& state) noexcept {
    return state.was_valid && !state.end_of_stream;
}

/**
 * First candidate (x, 0, ..., 0) with x = ceil(n / g1).
 *
 * The bound comparison is applied to this candidate too, except for n = 0 with
 * the all-zero bound: the zero vector is then reported once before the stream
 * ends.
 */
WorkerState first_state(const Instance& instance, Candidate bound);

/// Root worker: zero bound.
WorkerState first_state(const Instance& instance);

/**
 * Decrements a[index] and solves a[index + 1] as the least m with
 * phi(a) + m * g[index + 1] >= n. Indices are zero based.
 *
 * Requires index + 1 < d, a[index] >= 1 and a[j] == 0 for j > index.
 * Returns whether the solved candidate is a factorization. A residual <= 0
 * cannot arise from stream states; it sets a[index + 1] = 0 and is tallied in
 * nonpositive_residual_count().
 */
bool decrement_and_solve(const Instance& instance, Candidate& a, std::size_t index);

/// g_d / gcd(g_{d-1}, g_d). Throws ContractViolation when d < 2.
Natural modulo_skip_step(const Instance& instance);

/// One step of the greedy successor. In place; no-op once end_of_stream is set.
void next_candidate(WorkerState& state, const StreamConfig& config = {});

/// Steps until a factorization is reached or the stream ends.
void next_factorization(WorkerState& state, const StreamConfig& config = {});

/// Process-wide tally of solver calls that saw a residual <= 0.
std::uint64_t nonpositive_residual_count() noexcept;

}  // namespace lexfact
