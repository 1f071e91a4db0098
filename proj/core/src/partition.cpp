#include "lexfact/partition.hpp"

#include <algorithm>
#include <barrier>
#include <exception>
#include <stdexcept>
#include <thread>

namespace lexfact {

void PoolConfig::validate() const {
    if (workers == 0) throw std::invalid_argument("worker count must be at least 1");
    if (buffer_capacity == 0) throw std::invalid_argument("buffer capacity must be at least 1");
    if (steps_between_splits == 0) throw std::invalid_argument("steps between splits must be at least 1");
}

std::optional<Candidate> split_work(const WorkerState& donor) {
    if (donor.end_of_stream) return std::nullopt;
    const Candidate& a = donor.previous;
    const Candidate& b = donor.bound;
    const std::size_t d = a.size();

    std::size_t i = 0;
    while (i + 1 < d && !(a[i] > 0 && a[i] != b[i])) ++i;
    if (i + 1 >= d) return std::nullopt;

    // Copy of the previous candidate, not of the bound; also clears i+1 so the
    // solver starts from an empty tail.
    Candidate cut(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    cut.resize(d, 0);
    decrement_and_solve(*donor.instance, cut, i);

    if (lex_less(b, cut) && lex_less(cut, a)) return cut;
    return std::nullopt;
}

SplitOutcome apply_split(WorkerState& donor, Candidate cut) {
    if (donor.end_of_stream || !lex_less(donor.bound, cut) || !lex_less(cut, donor.previous)) {
        throw ContractViolation("apply_split: cut must lie strictly inside the donor's remaining range");
    }
    const Instance& instance = *donor.instance;
    SplitOutcome out;
    out.recipient.instance = &instance;
    out.recipient.bound = std::move(donor.bound);
    out.recipient.was_valid = phi(instance, cut) == instance.element();
    out.recipient.end_of_stream = false;
    if (out.recipient.was_valid) out.split_factorization = cut;
    donor.bound = cut;
    out.recipient.previous = std::move(cut);
    return out;
}

WorkPool::WorkPool(const Instance& instance, const PoolConfig& config)
    : instance_(&instance), config_(config) {
    config_.validate();
    const std::size_t d = instance.dimension();
    slots_.resize(config_.workers);
    for (Slot& slot : slots_) {
        slot.state.instance = &instance;
        slot.state.previous.assign(d, 0);
        slot.state.bound.assign(d, 0);
        slot.state.end_of_stream = true;
        slot.buffer.resize(config_.buffer_capacity * d);
    }
    Slot& root = slots_.back();
    root.state = first_state(instance);
    if (!root.state.end_of_stream) ++root.candidates;
    if (emits(root.state)) {
        std::copy(root.state.previous.begin(), root.state.previous.end(), root.buffer.begin());
        root.buffered = 1;
    }
}

bool WorkPool::finished() const noexcept {
    return std::all_of(slots_.begin(), slots_.end(), [](const Slot& s) { return s.state.end_of_stream; });
}

void WorkPool::advance(std::size_t index) {
    Slot& slot = slots_[index];
    WorkerState& state = slot.state;
    const std::size_t d = state.previous.size();
    const std::size_t capacity = config_.buffer_capacity;
    for (std::size_t step = 0; step < config_.steps_between_splits; ++step) {
        if (state.end_of_stream || slot.buffered == capacity) break;
        next_candidate(state, config_.stream);
        if (state.end_of_stream) break;
        ++slot.candidates;
        if (state.was_valid) {
            std::copy(state.previous.begin(), state.previous.end(),
                      slot.buffer.begin() + static_cast<std::ptrdiff_t>(slot.buffered * d));
            ++slot.buffered;
        }
    }
}

void WorkPool::flush(Consumer& consumer, const PoolHooks* hooks) {
    const std::size_t d = instance_->dimension();
    for (std::size_t index = 0; index < slots_.size(); ++index) {
        Slot& slot = slots_[index];
        for (std::size_t k = 0; k < slot.buffered; ++k) {
            const std::span<const Natural> f(slot.buffer.data() + k * d, d);
            consumer.accept(f);
            if (hooks && hooks->on_emit) hooks->on_emit(index, f);
        }
        slot.buffered = 0;
    }
}

std::size_t WorkPool::redistribute(Consumer& consumer, const PoolHooks* hooks) {
    std::size_t made = 0;
    for (std::size_t i = slots_.size(); i-- > 0;) {
        if (!slots_[i].state.end_of_stream) continue;
        for (std::size_t j = i + 1; j < slots_.size(); ++j) {
            WorkerState& donor = slots_[j].state;
            auto cut = split_work(donor);
            if (!cut) continue;

            if (hooks && hooks->on_split) {
                const Candidate old_bound = donor.bound;
                const bool valid = phi(*instance_, *cut) == instance_->element();
                hooks->on_split(SplitEvent{i, j, donor.previous, old_bound, *cut, valid});
            }
            SplitOutcome outcome = apply_split(donor, std::move(*cut));
            slots_[i].state = std::move(outcome.recipient);
            ++splits_;
            ++made;
            if (outcome.split_factorization) {
                ++split_factorizations_;
                consumer.accept(*outcome.split_factorization);
                if (hooks && hooks->on_emit) hooks->on_emit(PoolHooks::kSplitSource, *outcome.split_factorization);
            }
            break;
        }
    }
    return made;
}

PoolStats WorkPool::stats() const noexcept {
    PoolStats out;
    out.splits = splits_;
    out.split_factorizations = split_factorizations_;
    for (const Slot& slot : slots_) out.candidates += slot.candidates;
    return out;
}

SequentialStats run_sequential(const Instance& instance, const StreamConfig& config, Consumer& consumer) {
    SequentialStats stats;
    WorkerState state = first_state(instance);
    while (!state.end_of_stream) {
        ++stats.candidates;
        if (state.was_valid) {
            ++stats.factorizations;
            consumer.accept(state.previous);
        }
        next_candidate(state, config);
    }
    return stats;
}

PoolStats run_pool(const Instance& instance, const PoolConfig& config, Consumer& consumer, const PoolHooks* hooks) {
    WorkPool pool(instance, config);
    std::uint64_t phases = 0;

    // Serialized section; returns true once no slot has work left.
    auto barrier_section = [&]() {
        pool.flush(consumer, hooks);
        pool.redistribute(consumer, hooks);
        if (hooks && hooks->on_barrier) hooks->on_barrier(pool);
        return pool.finished();
    };

    bool done = barrier_section();
    const std::size_t workers = pool.size();

    if (workers == 1) {
        while (!done) {
            pool.advance(0);
            ++phases;
            done = barrier_section();
        }
    } else if (!done) {
        std::exception_ptr failure;
        auto on_completion = [&]() noexcept {
            ++phases;
            try {
                done = barrier_section();
            } catch (...) {
                failure = std::current_exception();
                done = true;
            }
        };
        std::barrier sync(static_cast<std::ptrdiff_t>(workers), on_completion);

        auto work = [&](std::size_t index) {
            while (true) {
                pool.advance(index);
                sync.arrive_and_wait();
                if (done) break;
            }
        };
        {
            std::vector<std::jthread> threads;
            threads.reserve(workers - 1);
            for (std::size_t index = 1; index < workers; ++index) threads.emplace_back(work, index);
            work(0);
        }
        if (failure) std::rethrow_exception(failure);
    }

    PoolStats stats = pool.stats();
    stats.phases = phases;
    return stats;
}

}  // namespace lexfact
