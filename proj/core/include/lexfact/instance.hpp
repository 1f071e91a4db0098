#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexfact {

/// Fixed-width unsigned integer used for every coordinate, generator and element.
using Natural = std::uint64_t;

/// A point of N^d. Produced by the streams; may or may not be a factorization.
using Candidate = std::vector<Natural>;

/// Raised when an operation is called outside of its documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * The problem Z(n, (g1,...,gd)): all nonnegative a with a1*g1 + ... + ad*gd = n.
 *
 * Generators are kept exactly as given. Duplicates, non-coprime sets and any
 * order are accepted; the only requirements are gi >= 1, d >= 1 and
 * n + max(gi) < 2^64 so that every intermediate value of the streams fits.
 */
class Instance {
public:
    /// Throws std::invalid_argument when the generators or element are unusable.
    Instance(Natural element, std::vector<Natural> generators);

    Natural element() const noexcept { return element_; }
    std::span<const Natural> generators() const noexcept { return generators_; }
    Natural generator(std::size_t index) const { return generators_.at(index); }
    std::size_t dimension() const noexcept { return generators_.size(); }

    /// Additive order of g_{d-1} in Z_{g_d}; zero when d < 2.
    Natural modulo_step() const noexcept { return modulo_step_; }

    std::string describe() const;

private:
    Natural element_;
    std::vector<Natural> generators_;
    Natural modulo_step_ = 0;
};

/**
 * Evaluation map a -> sum a_i g_i. Saturates at the maximum representable
 * value instead of wrapping, so arbitrary records still compare correctly
 * against the element.
 */
Natural phi(const Instance& instance, std::span<const Natural> a);

/// Leftmost index most significant. Throws ContractViolation on length mismatch.
std::strong_ordering lex_compare(std::span<const Natural> a, std::span<const Natural> b);

inline bool lex_less(std::span<const Natural> a, std::span<const Natural> b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

inline bool lex_less_equal(std::span<const Natural> a, std::span<const Natural> b) {
    return lex_compare(a, b) != std::strong_ordering::greater;
}

/// Space separated coordinates, e.g. "2 2".
std::string to_string(std::span<const Natural> a);

}  // namespace lexfact
