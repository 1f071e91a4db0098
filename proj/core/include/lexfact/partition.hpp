#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "lexfact/consumers.hpp"
#include "lexfact/instance.hpp"
#include "lexfact/lexstream.hpp"

namespace lexfact {

struct PoolConfig {
    std::size_t workers = 1;
    std::size_t buffer_capacity = 1000;
    std::size_t steps_between_splits = 1024;
    StreamConfig stream;

    /// Throws std::invalid_argument if any count is zero.
    void validate() const;
};

/**
 * Proposes a new bound c for a running donor with previous candidate a and
 * bound b: take the leftmost i < d with a_i > 0 and a_i != b_i, copy a, clear
 * everything right of i and decrement-and-solve at i. Returned only if
 * b <lex c <lex a.
 */
std::optional<Candidate> split_work(const WorkerState& donor);

struct SplitOutcome {
    WorkerState recipient;
    /// Set when the new bound is itself a factorization; it belongs to neither
    /// worker and must be reported by the caller exactly once.
    std::optional<Candidate> split_factorization;
};

/// Donor keeps (c, a); the recipient starts at c and runs down to the old bound.
SplitOutcome apply_split(WorkerState& donor, Candidate cut);

struct SplitEvent {
    std::size_t recipient;
    std::size_t donor;
    std::span<const Natural> donor_previous;
    std::span<const Natural> donor_old_bound;
    std::span<const Natural> cut;
    bool cut_is_factorization;
};

class WorkPool;

/// Instrumentation callbacks; all run inside the serialized barrier section.
struct PoolHooks {
    static constexpr std::size_t kSplitSource = std::numeric_limits<std::size_t>::max();

    std::function<void(const SplitEvent&)> on_split;
    /// Called for every reported factorization; `slot` is kSplitSource for saved split bounds.
    std::function<void(std::size_t slot, std::span<const Natural>)> on_emit;
    /// Called after each barrier's flush and redistribution.
    std::function<void(const WorkPool&)> on_barrier;
};

struct PoolStats {
    std::uint64_t phases = 0;
    std::uint64_t splits = 0;
    std::uint64_t split_factorizations = 0;
    std::uint64_t candidates = 0;
};

/**
 * Ordered worker slots, each with a private factorization buffer. The root
 * slice starts in the last slot. advance() may run concurrently on distinct
 * slots; flush() and redistribute() must run with no slot mid-advance.
 */
class WorkPool {
public:
    struct Slot {
        WorkerState state;
        std::vector<Natural> buffer;  // flat, buffered * d values
        std::size_t buffered = 0;
        std::uint64_t candidates = 0;
    };

    WorkPool(const Instance& instance, const PoolConfig& config);

    std::size_t size() const noexcept { return slots_.size(); }
    const Slot& slot(std::size_t index) const { return slots_.at(index); }
    const Instance& instance() const noexcept { return *instance_; }
    bool finished() const noexcept;

    /// Up to steps_between_splits steps, stopping early at end of stream or a full buffer.
    void advance(std::size_t index);

    /// Hands every buffered factorization to the consumer in slot order.
    void flush(Consumer& consumer, const PoolHooks* hooks = nullptr);

    /// Refills ended slots from the tail backwards; slot i probes i+1, i+2, ...
    /// Split factorizations go straight to the consumer. Returns the number of splits.
    std::size_t redistribute(Consumer& consumer, const PoolHooks* hooks = nullptr);

    PoolStats stats() const noexcept;

private:
    const Instance* instance_;
    PoolConfig config_;
    std::vector<Slot> slots_;
    std::uint64_t splits_ = 0;
    std::uint64_t split_factorizations_ = 0;
};

struct SequentialStats {
    /// Candidates produced before the stream ended, including the first.
    std::uint64_t candidates = 0;
    std::uint64_t factorizations = 0;
};

/// Single worker with zero bound.
SequentialStats run_sequential(const Instance& instance, const StreamConfig& config, Consumer& consumer);

/**
 * Barrier-phased pool on config.workers threads. Each phase every running slot
 * advances on its own thread; at the barrier buffers are flushed and idle
 * slots receive split work. The reported set equals run_sequential's for any
 * configuration; the order does not.
 */
PoolStats run_pool(const Instance& instance, const PoolConfig& config, Consumer& consumer,
                   const PoolHooks* hooks = nullptr);

}  // namespace lexfact
