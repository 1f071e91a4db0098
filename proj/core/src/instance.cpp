#include "lexfact/instance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace lexfact {

namespace {

constexpr Natural kMax = std::numeric_limits<Natural>::max();

}  // namespace

Instance::Instance(Natural element, std::vector<Natural> generators)
    : element_(element), generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("at least one generator is required");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i] == 0) {
            throw std::invalid_argument("generator " + std::to_string(i + 1) + " is zero; generators must be positive");
        }
    }
    const Natural largest = *std::max_element(generators_.begin(), generators_.end());
    // n + max(g) < 2^B
    if (largest > kMax - element_) {
        throw std::invalid_argument("element plus largest generator must be below 2^64");
    }
    const std::size_t d = generators_.size();
    if (d >= 2) {
        const Natural last = generators_[d - 1];
        modulo_step_ = last / std::gcd(generators_[d - 2], last);
    }
}

std::string Instance::describe() const {
    std::ostringstream out;
    out << "n=" << element_ << " g=(";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        out << (i ? "," : "") << generators_[i];
    }
    out << ')';
    return out.str();
}

Natural phi(const Instance& instance, std::span<const Natural> a) {
    const auto gens = instance.generators();
    if (a.size() != gens.size()) {
        throw ContractViolation("phi: candidate length " + std::to_string(a.size()) + " does not match dimension " +
                                std::to_string(gens.size()));
    }
    Natural sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Natural term = 0;
        if (__builtin_mul_overflow(a[i], gens[i], &term) || __builtin_add_overflow(sum, term, &sum)) {
            return kMax;
        }
    }
    return sum;
}

std::strong_ordering lex_compare(std::span<const Natural> a, std::span<const Natural> b) {
    if (a.size() != b.size()) {
        throw ContractViolation("lex_compare: length mismatch");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] <=> b[i];
        }
    }
    return std::strong_ordering::equal;
}

std::string to_string(std::span<const Natural> a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(a[i]);
    }
    return out;
}

}  // namespace lexfact
