#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>

#include "lexfact/instance.hpp"

namespace lexfact::oracle {

/// Exhaustive ground truth for Z(n, g). Deliberately shares nothing with the stream code.
struct OracleResult {
    std::set<Candidate> factorizations;
    std::uint64_t count = 0;
};

class OracleTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultWorkCeiling = 200'000'000;

/// Throws OracleTooLarge once more than `work_ceiling` partial vectors have been visited.
OracleResult brute_force(const Instance& instance, std::uint64_t work_ceiling = kDefaultWorkCeiling);

}  // namespace lexfact::oracle
