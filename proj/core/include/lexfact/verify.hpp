#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lexfact/instance.hpp"
#include "lexfact/lexstream.hpp"
#include "lexfact/partition.hpp"

namespace lexfact::verify {

/// Findings of a checked run. Empty `violations` means every property held.
struct Report {
    std::uint64_t candidates = 0;
    /// next_candidate calls until the stream reported its end.
    std::uint64_t steps = 0;
    std::uint64_t barriers = 0;
    std::uint64_t splits = 0;
    std::set<Candidate> emitted;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    void fail(std::string message);
};

/// prod_i (floor(n / g_i) + 1), saturating.
std::uint64_t floor_product(const Instance& instance);

/// prod_i (ceil(n / g_i) + 1), saturating: the number of vectors with every
/// a_i <= ceil(n / g_i), a box that holds every candidate a stream produces.
std::uint64_t coordinate_box_size(const Instance& instance);

/**
 * Steps a single stream from first_state (zero bound) to its end, checking on
 * every state: strict descent, wasValid consistency, coordinate bounds,
 * overshoot 0 <= phi - n < g_k (k the rightmost nonzero index), validity of
 * modulo-skip results, termination within coordinate_box_size() steps, and
 * that the solver never saw a residual <= 0. With an oracle it also checks that no factorization lies
 * strictly between consecutive candidates and that the emitted set matches.
 */
Report check_stream(const Instance& instance, const StreamConfig& config,
                    const std::set<Candidate>* oracle = nullptr);

/**
 * Runs the pool with instrumentation: every accepted split satisfies
 * b <lex c <lex a, and at every barrier the running slices (b_k, a_k] are
 * pairwise disjoint. With an oracle, every barrier is also checked for exact
 * coverage (emitted so far plus the open slices equals the oracle set) and the
 * final result for duplicate-free equality.
 */
Report check_pool(const Instance& instance, const PoolConfig& config,
                  const std::set<Candidate>* oracle = nullptr);

}  // namespace lexfact::verify
