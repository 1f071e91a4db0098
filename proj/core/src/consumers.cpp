#include "lexfact/consumers.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace lexfact {

namespace {

std::uint64_t total_length(std::span<const Natural> a) {
    return std::accumulate(a.begin(), a.end(), std::uint64_t{0});
}

}  // namespace

void CollectingConsumer::accept(std::span<const Natural> factorization) {
    items_.emplace_back(factorization.begin(), factorization.end());
}

std::vector<Candidate> CollectingConsumer::finalize(bool sort_output) {
    if (sort_output) {
        std::sort(items_.begin(), items_.end(), std::greater<>{});
    }
    return items_;
}

void ExistsConsumer::accept(std::span<const Natural> factorization) {
    if (!found_ && predicate_(factorization)) {
        found_ = true;
    }
}

ExistsConsumer::Predicate min_length_at_least(std::uint64_t length) {
    return [length](std::span<const Natural> a) { return total_length(a) >= length; };
}

ExistsConsumer::Predicate max_length_at_most(std::uint64_t length) {
    return [length](std::span<const Natural> a) { return total_length(a) <= length; };
}

void write_line(std::ostream& sink, OutputFormat format, std::span<const Natural> factorization) {
    const char separator = format == OutputFormat::csv ? ',' : ' ';
    for (std::size_t i = 0; i < factorization.size(); ++i) {
        if (i) sink.put(separator);
        sink << factorization[i];
    }
    sink.put('\n');
}

WritingConsumer::WritingConsumer(std::ostream& sink, OutputFormat format, std::size_t dimension)
    : sink_(sink), format_(format) {
    if (format_ == OutputFormat::csv) {
        for (std::size_t i = 0; i < dimension; ++i) {
            if (i) sink_.put(',');
            sink_ << 'a' << (i + 1);
        }
        sink_.put('\n');
        check();
    }
}

void WritingConsumer::accept(std::span<const Natural> factorization) {
    write_line(sink_, format_, factorization);
    check();
}

void WritingConsumer::finalize() {
    sink_.flush();
    check();
}

void WritingConsumer::check() const {
    if (!sink_) {
        throw SinkError("failed writing factorizations to output");
    }
}

}  // namespace lexfact
