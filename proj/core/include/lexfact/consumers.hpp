#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "lexfact/instance.hpp"

namespace lexfact {

/**
 * Sink for emitted factorizations. Pools call accept() only from their
 * serialized barrier section, so implementations need no synchronization.
 */
class Consumer {
public:
    virtual ~Consumer() = default;
    virtual void accept(std::span<const Natural> factorization) = 0;
};

class CountingConsumer final : public Consumer {
public:
    void accept(std::span<const Natural>) override { ++count_; }
    std::uint64_t finalize() const noexcept { return count_; }

private:
    std::uint64_t count_ = 0;
};

class CollectingConsumer final : public Consumer {
public:
    void accept(std::span<const Natural> factorization) override;

    /// With sort_output the result is in descending lexicographic order.
    std::vector<Candidate> finalize(bool sort_output);
    const std::vector<Candidate>& collected() const noexcept { return items_; }

private:
    std::vector<Candidate> items_;
};

/// Remembers whether any accepted factorization satisfied the predicate.
class ExistsConsumer final : public Consumer {
public:
    using Predicate = std::function<bool(std::span<const Natural>)>;

    explicit ExistsConsumer(Predicate predicate) : predicate_(std::move(predicate)) {}
    void accept(std::span<const Natural> factorization) override;
    bool finalize() const noexcept { return found_; }

private:
    Predicate predicate_;
    bool found_ = false;
};

/// Built-in predicates over the length sum(a_i) of a factorization.
ExistsConsumer::Predicate min_length_at_least(std::uint64_t length);
ExistsConsumer::Predicate max_length_at_most(std::uint64_t length);

enum class OutputFormat { text, csv };

class SinkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Serializes factorizations to a byte stream.
 *
 * text: "a1 a2 ... ad\n" per factorization, no header.
 * csv:  header "a1,...,ad\n" then "a1,a2,...,ad\n" per factorization.
 *
 * Write failures raise SinkError.
 */
class WritingConsumer final : public Consumer {
public:
    WritingConsumer(std::ostream& sink, OutputFormat format, std::size_t dimension);
    void accept(std::span<const Natural> factorization) override;
    void finalize();

private:
    void check() const;

    std::ostream& sink_;
    OutputFormat format_;
};

/// Writes a single factorization line in the given format (no header).
void write_line(std::ostream& sink, OutputFormat format, std::span<const Natural> factorization);

}  // namespace lexfact
