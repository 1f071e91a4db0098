#include "lexfact/oracle.hpp"

#include <string>
#include <vector>

namespace lexfact::oracle {

namespace {

class Enumerator {
public:
    Enumerator(const Instance& instance, std::uint64_t ceiling)
        : gens_(instance.generators().begin(), instance.generators().end()),
          ceiling_(ceiling),
          coords_(gens_.size(), 0) {}

    void run(Natural remaining, std::size_t depth, OracleResult& out) {
        if (++visited_ > ceiling_) {
            throw OracleTooLarge("oracle too large: more than " + std::to_string(ceiling_) + " partial vectors");
        }
        const std::size_t last = gens_.size() - 1;
        if (depth == last) {
            if (remaining % gens_[last] == 0) {
                coords_[last] = remaining / gens_[last];
                out.factorizations.insert(coords_);
                ++out.count;
            }
            return;
        }
        // Ascending: a_depth = 0, 1, ... while the partial sum stays within n.
        Natural used = 0;
        for (Natural value = 0;; ++value) {
            coords_[depth] = value;
            run(remaining - used, depth + 1, out);
            if (remaining - used < gens_[depth]) break;
            used += gens_[depth];
        }
        coords_[depth] = 0;
    }

private:
    std::vector<Natural> gens_;
    std::uint64_t ceiling_;
    std::uint64_t visited_ = 0;
    Candidate coords_;
};

}  // namespace

OracleResult brute_force(const Instance& instance, std::uint64_t work_ceiling) {
    OracleResult out;
    Enumerator enumerator(instance, work_ceiling);
    enumerator.run(instance.element(), 0, out);
    return out;
}

}  // namespace lexfact::oracle
